#include "corpus.hpp"

#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

namespace corpus {

namespace {

struct Rng {
    std::mt19937 g;
    explicit Rng(std::uint32_t seed) : g(seed) {}

    std::uint64_t range(std::uint64_t lo, std::uint64_t hi) {  // inclusive
        return lo + g() % (hi - lo + 1);
    }

    template <class T>
    const T& pick(const std::vector<T>& v) {
        return v[g() % v.size()];
    }

    /// Skewed index: heavy head, geometric tail.
    std::size_t hot(std::size_t n) {
        std::size_t i = 0;
        while (i + 1 < n && g() % 100 < 55) ++i;
        return i;
    }
};

std::string pad(std::uint64_t v, int width) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%0*llu", width, static_cast<unsigned long long>(v));
    return buf;
}

/// Dotted-quad addresses laid out as a shallow trie so each skeleton column
/// has at most three distinct values at every mining level.
const std::vector<std::string>& ip_pool() {
    static const std::vector<std::string> ips = {
        "192.168.1.7",  "192.168.1.8",  "192.168.2.9",  "192.168.3.4",
        "10.0.0.1",     "10.0.0.2",     "10.0.1.5",     "172.16.4.20",
        "172.16.4.21",  "172.16.5.33",  "172.16.5.34",  "172.16.6.40",
    };
    return ips;
}

/// "HH:MM" clock whose minute advances in three sequential blocks.
std::string clock_hm(std::size_t i, std::size_t total, int hour, int minute0) {
    const int minute = minute0 + static_cast<int>(i * 3 / total);
    return pad(static_cast<std::uint64_t>(hour), 2) + ":" +
           pad(static_cast<std::uint64_t>(minute), 2);
}

using Gen = std::function<std::string(std::size_t, std::size_t, Rng&)>;

std::string render(const Gen& gen, std::size_t lines, std::uint32_t seed) {
    Rng rng(seed);
    std::string out;
    out.reserve(lines * 96);
    for (std::size_t i = 0; i < lines; ++i) {
        out += gen(i, lines, rng);
        out += '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------
// Dataset generators (2000 lines each).
// ---------------------------------------------------------------------------

std::string gen_apache(std::size_t i, std::size_t n, Rng& r) {
    static const std::vector<std::string> dirs = {"admin", "shared", "pics", "cgi-bin", "data"};
    const std::string ts = "[Mon Aug 01 " + clock_hm(i, n, 6, 7) + " 2005]";
    switch (r.g() % 4) {
        case 0:
            return ts + " [error] [client " + ip_pool()[r.hot(ip_pool().size())] +
                   "] Directory index forbidden by rule: /var/www/html/" + r.pick(dirs) + "/";
        case 1:
            return ts + " [notice] jk2_init() Found child " + std::to_string(1500 + i) +
                   " in scoreboard slot " + std::to_string(r.range(0, 12));
        case 2:
            return ts + " [error] mod_jk child workerEnv in error state " +
                   std::to_string(r.range(6, 8));
        default:
            return ts + " [notice] workerEnv.init() ok /etc/httpd/conf/workers2.properties";
    }
}

std::string gen_hdfs(std::size_t i, std::size_t n, Rng& r) {
    const std::string blk = "blk_-" + std::to_string(r.range(100000000000000ull, 999999999999999ull));
    const std::string ip = ip_pool()[r.hot(ip_pool().size())];
    const std::string ts = "081109 " + clock_hm(i, n, 20, 35);
    switch (r.g() % 3) {
        case 0:
            return ts + " " + std::to_string(140 + r.range(0, 40)) +
                   " INFO dfs.DataNode$PacketResponder: PacketResponder 1 for block " + blk +
                   " terminating";
        case 1:
            return ts + " " + std::to_string(140 + r.range(0, 40)) +
                   " INFO dfs.FSNamesystem: BLOCK* NameSystem.addStoredBlock: blockMap updated: " +
                   ip + ":50010 is added to " + blk + " size " + std::to_string(r.range(1000, 9999999));
        default:
            return ts + " " + std::to_string(140 + r.range(0, 40)) +
                   " INFO dfs.DataNode$DataXceiver: Receiving block " + blk + " src: /" + ip +
                   ":" + std::to_string(r.range(33000, 59999)) + " dest: /" + ip + ":50010";
    }
}

std::string gen_zookeeper(std::size_t i, std::size_t n, Rng& r) {
    static const std::vector<std::string> ctx = {
        "[main:QuorumPeer@913]",
        "[main:QuorumPeer@914]",
        "[main:FileSnap@83]",
        "[WorkerReceiver:FastLeaderElection@542]",
        "[WorkerReceiver:FastLeaderElection@595]",
        "[WorkerSender:QuorumCnxManager@199]",
        "[LearnerHandler:Leader@601]",
        "[LearnerHandler:Leader@602]",
        "[LearnerHandler:ZooKeeperServer@162]",
        "[CommitProcessor:NIOServerCnxn@1001]",
        "[CommitProcessor:NIOServerCnxn@1007]",
        "[SyncThread:FileTxnLog@199]",
    };
    const std::string head = "2015-07-29 " + clock_hm(i, n, 17, 41) + " - INFO " +
                             ctx[r.hot(ctx.size())] + " - ";
    switch (r.g() % 3) {
        case 0:
            return head + "Received connection request /" + ip_pool()[r.hot(ip_pool().size())] +
                   ":" + std::to_string(r.range(33000, 59999));
        case 1:
            return head + "Accepted socket connection from /" +
                   ip_pool()[r.hot(ip_pool().size())] + ":2181";
        default:
            return head + "Established session with negotiated timeout " +
                   std::to_string(r.range(10000, 40000)) + " for client id " +
                   std::to_string(7000000000000 + i);
    }
}

std::string gen_healthapp(std::size_t i, std::size_t n, Rng& r) {
    const std::uint64_t ms = 1514038530000ull + i * 977;
    const std::string head = std::to_string(ms);
    (void)n;
    switch (r.g() % 4) {
        case 0:
            return head + "|Step_LSC|30002312|onStandStepChanged " + std::to_string(3500 + i);
        case 1:
            return head + "|Step_LSC|30002312|onExtend:" + std::to_string(r.range(0, 3)) + " " +
                   std::to_string(100 + r.range(0, 99)) + " " + std::to_string(r.range(0, 9));
        case 2:
            return head + "|Step_StandReportReceiver|30002312|REPORT : " + std::to_string(7000 + i) +
                   " " + std::to_string(200 + r.range(0, 80)) + " " +
                   std::to_string(r.range(1000, 250000));
        default:
            return head + "|Step_SPUtils|30002312|getTodayTotalDetailSteps = " +
                   std::to_string(1400000000 + i * 13) + "##" + std::to_string(3500 + i);
    }
}

std::string gen_hpc(std::size_t i, std::size_t n, Rng& r) {
    static const std::vector<std::string> nodes = {
        "node-127", "node-128", "node-31",  "node-32",  "node-0",   "node-1",
        "node-64",  "node-65",  "node-96",  "node-97",  "node-200", "node-201",
        "node-202", "node-247",
    };
    const std::uint64_t ts = 1121492746ull + i * 3;
    (void)n;
    switch (r.g() % 3) {
        case 0:
            return "- " + std::to_string(ts) + " " + nodes[r.hot(nodes.size())] +
                   " unix.hw state_change.unavailable " + std::to_string(ts) +
                   " 1 Component State Change: Component \"alt0\" is in the unavailable state "
                   "(HWID=" + std::to_string(r.range(1000, 9999)) + ")";
        case 1:
            return "- " + std::to_string(ts) + " " + nodes[r.hot(nodes.size())] +
                   " action start " + std::to_string(ts);
        default:
            return "- " + std::to_string(ts) + " " + nodes[r.hot(nodes.size())] +
                   " boot_cmd new " + std::to_string(ts) + " Targeting domains:" +
                   nodes[r.hot(nodes.size())] + " and nodes:" + std::to_string(r.range(0, 255));
    }
}

std::string gen_bgl(std::size_t i, std::size_t n, Rng& r) {
    static const std::vector<std::string> locs = {
        "R02-M1-N0-C:J12-U11", "R02-M1-N0-C:J12-U01", "R02-M1-N2-C:J08-U11",
        "R02-M1-N4-C:J05-U01", "R23-M0-N0-C:J12-U11", "R23-M0-N2-C:J10-U01",
        "R23-M0-N8-C:J14-U11", "R30-M0-N9-C:J16-U01", "R30-M0-N9-C:J16-U11",
        "R30-M1-N3-C:J12-U01", "R30-M1-N6-C:J09-U11", "R30-M1-N6-C:J09-U01",
    };
    const std::uint64_t ts = 1117838570ull + i * 2;
    const std::string head = "- " + std::to_string(ts) + " 2005.06.03 " +
                             locs[r.hot(locs.size())] + " " + std::to_string(ts) + " RAS ";
    (void)n;
    switch (r.g() % 3) {
        case 0:
            return head + "KERNEL INFO instruction cache parity error corrected";
        case 1:
            return head + "KERNEL INFO " + std::to_string(r.range(1, 60)) +
                   " ddr errors(s) detected and corrected on rank 0, symbol " +
                   std::to_string(r.range(0, 35)) + ", bit " + std::to_string(r.range(0, 7));
        default:
            return head + "APP FATAL ciod: failed to read message prefix on control stream "
                   "CioStream socket to " + ip_pool()[r.hot(ip_pool().size())] + ":" +
                   std::to_string(r.range(33000, 59999));
    }
}

std::string gen_hadoop(std::size_t i, std::size_t n, Rng& r) {
    const std::string app = "appattempt_1445144423722_" + pad(20 + i * 3 / n, 4) + "_" + pad(1, 6);
    const std::string head = "2015-10-18 " + clock_hm(i, n, 18, 1) + " [main] INFO ";
    switch (r.g() % 3) {
        case 0:
            return head + "org.apache.hadoop.mapreduce.v2.app.MRAppMaster: Created MRAppMaster "
                   "for application " + app;
        case 1:
            return head + "org.apache.hadoop.yarn.client.RMProxy: Connecting to ResourceManager "
                   "at msra-sa-41/" + ip_pool()[r.hot(ip_pool().size())] + ":8030";
        default:
            return head + "org.apache.hadoop.mapred.MapTask: Processing split: " +
                   std::to_string(r.range(0, 1)) + " of " + std::to_string(r.range(100000, 999999)) +
                   " bytes for " + app;
    }
}

std::string gen_linux(std::size_t i, std::size_t n, Rng& r) {
    static const std::vector<std::string> hosts = {
        "mail.ccsf.org",  "www.mond.at",     "proxy.lvs.net",  "gw.kiev.ua",
        "dsl.scarlet.be", "ns.totalhost.ro", "mx.iinet.net",   "web.onvol.net",
        "srv.puntal.es",  "adsl.pool.tt",    "vps.colo.fr",    "cpe.telecom.pt",
        "host.dakco.cn",
    };
    const std::string ts = "Aug 1 " + clock_hm(i, n, 8, 2);
    switch (r.g() % 3) {
        case 0:
            return ts + " combo sshd(pam_unix)[" + std::to_string(r.range(10000, 32000)) +
                   "]: authentication failure; logname= uid=0 euid=0 tty=NODEVssh ruser= rhost=" +
                   hosts[r.hot(hosts.size())];
        case 1:
            return ts + " combo sshd(pam_unix)[" + std::to_string(r.range(10000, 32000)) +
                   "]: session opened for user cyrus by (uid=" + std::to_string(r.range(0, 1)) + ")";
        default:
            return ts + " combo kernel: audit(" + std::to_string(1123916400 + i) + "." +
                   pad(r.range(0, 999), 3) + ":" + std::to_string(r.range(2, 9)) +
                   "): avc: denied { read } for pid=" + std::to_string(r.range(1000, 9999)) +
                   " comm=syslogd";
    }
}

std::string gen_mac(std::size_t i, std::size_t n, Rng& r) {
    static const std::vector<std::string> hosts = {
        "calvisitor-10-105-160-95", "calvisitor-10-105-160-22", "calvisitor-10-105-162-8",
        "calvisitor-10-105-162-44", "calvisitor-10-105-163-9",  "airbears2-10-142-0-15",
        "airbears2-10-142-0-57",    "airbears2-10-142-1-8",     "airbears2-10-142-1-94",
        "authorMacBook-Pro",        "authorMacBook-Air",        "eduroam-169-233-14-20",
    };
    const std::string ts = "Jul 1 " + clock_hm(i, n, 9, 1);
    switch (r.g() % 3) {
        case 0:
            return ts + " " + hosts[r.hot(hosts.size())] + " kernel[0]: ARPT: " +
                   std::to_string(620700 + i) + "." + pad(r.range(0, 999999), 6) +
                   ": wl0: Roamed or switched channel";
        case 1:
            return ts + " " + hosts[r.hot(hosts.size())] +
                   " com.apple.CDScheduler[43]: Thermal pressure state: " +
                   std::to_string(r.range(0, 2)) + " Memory pressure state: 0";
        default:
            return ts + " " + hosts[r.hot(hosts.size())] + " kernel[0]: AppleCamIn: power " +
                   std::to_string(r.range(0, 1)) + " -> " + std::to_string(r.range(0, 1));
    }
}

std::string gen_openssh(std::size_t i, std::size_t n, Rng& r) {
    static const std::vector<std::string> users = {"admin", "test", "oracle", "guest", "ubnt"};
    const std::string ts = "Dec 10 " + clock_hm(i, n, 6, 55);
    const std::string pid = std::to_string(r.range(20000, 32000));
    switch (r.g() % 3) {
        case 0:
            return ts + " LabSZ sshd[" + pid + "]: Failed password for invalid user " +
                   r.pick(users) + " from " + ip_pool()[r.hot(ip_pool().size())] + " port " +
                   std::to_string(r.range(33000, 59999)) + " ssh2";
        case 1:
            return ts + " LabSZ sshd[" + pid + "]: Received disconnect from " +
                   ip_pool()[r.hot(ip_pool().size())] + ": 11: Bye Bye [preauth]";
        default:
            return ts + " LabSZ sshd[" + pid + "]: pam_unix(sshd:auth): authentication failure; "
                   "logname= uid=0 euid=0 tty=ssh ruser= rhost=" +
                   ip_pool()[r.hot(ip_pool().size())];
    }
}

std::string gen_openstack(std::size_t i, std::size_t n, Rng& r) {
    const std::string head = "nova-api.log 2017-05-16 " + clock_hm(i, n, 0, 0) + " " +
                             std::to_string(2931 + r.range(0, 2)) + " INFO ";
    switch (r.g() % 3) {
        case 0:
            return head + "nova.osapi_compute.wsgi.server [req-" +
                   std::to_string(r.range(100000000, 999999999)) + "] " +
                   ip_pool()[r.hot(ip_pool().size())] +
                   " \"GET /v2/servers/detail HTTP/1.1\" status: 200 len: " +
                   std::to_string(r.range(1700, 2000)) + " time: 0." +
                   pad(r.range(0, 9999999), 7);
        case 1:
            return head + "nova.compute.manager [instance: " + std::to_string(800000 + i) +
                   "] VM Started (Lifecycle Event)";
        default:
            return head + "nova.metadata.wsgi.server " + ip_pool()[r.hot(ip_pool().size())] +
                   " \"GET /latest/meta-data/ HTTP/1.1\" status: 404 len: 176 time: 0." +
                   pad(r.range(0, 9999999), 7);
    }
}

std::string gen_proxifier(std::size_t i, std::size_t n, Rng& r) {
    static const std::vector<std::string> exes = {"chrome.exe", "Dropbox.exe", "thunder.exe",
                                                  "WeChat.exe", "outlook.exe"};
    const std::string ts = "[07.27 " + clock_hm(i, n, 10, 38) + "] ";
    switch (r.g() % 3) {
        case 0:
            return ts + r.pick(exes) +
                   " - proxy.cse.cuhk.edu.hk:5070 open through proxy proxy.cse.cuhk.edu.hk:5070 "
                   "HTTPS";
        case 1:
            return ts + r.pick(exes) + " - proxy.cse.cuhk.edu.hk:5070 close, " +
                   std::to_string(r.range(100, 9999)) + " bytes sent, " +
                   std::to_string(r.range(100, 99999)) + " bytes received, lifetime 00:0" +
                   std::to_string(r.range(1, 9));
        default:
            return ts + r.pick(exes) + " *64 - proxy.cse.cuhk.edu.hk:5070 HTTPS";
    }
}

std::string gen_spark(std::size_t i, std::size_t n, Rng& r) {
    const std::string head = "17/06/09 " + clock_hm(i, n, 20, 10) + " INFO ";
    switch (r.g() % 3) {
        case 0:
            return head + "executor.Executor: Finished task " + std::to_string(r.range(0, 2)) +
                   ".0 in stage " + std::to_string(r.range(0, 2)) + ".0 (TID " +
                   std::to_string(i) + "). " + std::to_string(r.range(1000, 9999)) +
                   " bytes result sent to driver";
        case 1:
            return head + "storage.BlockManager: Found block rdd_" + std::to_string(r.range(2, 4)) +
                   "_" + std::to_string(r.range(0, 2)) + " locally";
        default:
            return head + "executor.CoarseGrainedExecutorBackend: Got assigned task " +
                   std::to_string(i);
    }
}

std::string gen_thunderbird(std::size_t i, std::size_t n, Rng& r) {
    static const std::vector<std::string> hosts = {
        "aadmin1", "aadmin2", "bn348",  "bn417",  "cn127", "cn128", "dn4",
        "dn561",   "en93",    "tbird1", "tbird2", "sn203", "sn204",
    };
    const std::uint64_t ts = 1131566461ull + i * 2;
    (void)n;
    switch (r.g() % 3) {
        case 0:
            return "- " + std::to_string(ts) + " 2005.11.09 " + hosts[r.hot(hosts.size())] +
                   " crond(pam_unix)[" + std::to_string(r.range(2000, 32000)) +
                   "]: session closed for user root";
        case 1:
            return "- " + std::to_string(ts) + " 2005.11.09 " + hosts[r.hot(hosts.size())] +
                   " kernel: scsi0 (0:0): rejecting I/O to offline device";
        default:
            return "- " + std::to_string(ts) + " 2005.11.09 " + hosts[r.hot(hosts.size())] +
                   " ib_sm.x[" + std::to_string(r.range(20000, 28000)) +
                   "]: [ib_sm_sweep.c:1455]: No topology change";
    }
}

std::string gen_windows(std::size_t i, std::size_t n, Rng& r) {
    const std::string ts = "2016-09-28 " + clock_hm(i, n, 4, 30) + ", Info";
    switch (r.g() % 4) {
        case 0:
            return ts + " CBS Loaded Servicing Stack v6.1.7601.23505 with Core: "
                   "C:\\Windows\\winsxs\\amd64_microsoft-windows-servicingstack_31bf3856ad364e35_"
                   "6.1.7601.23505_none_681aa442f6fed7f0\\cbscore.dll";
        case 1:
            return ts + " CSI 00000" + pad(110 + i % 90, 3) +
                   "@2016/9/27:20:30:31.455 WcpInitialize (wcp.dll version 0.0.0.6) called "
                   "(stack @0x7fed806eb5d @0x7fef9fb9b6d @0x7fef9f8358f)";
        case 2:
            return ts + " CBS SQM: Initializing online with Windows opt-in: False";
        default:
            return ts + " CBS Warning: Unrecognized packageExtended attribute. "
                   "[HRESULT = 0x80070057 - E_INVALIDARG]";
    }
}

std::string gen_android(std::size_t i, std::size_t n, Rng& r) {
    static const std::vector<std::string> pids = {"1702", "2395", "8935", "1820", "2299", "9001"};
    const std::string ts = "03-17 " + clock_hm(i, n, 16, 13);
    switch (r.g() % 3) {
        case 0:
            return ts + " " + r.pick(pids) + " " + r.pick(pids) +
                   " D PowerManagerService: acquire lock=" + std::to_string(r.range(100000000, 999999999)) +
                   ", flags=0x1, tag=RILJ_ACK_WL";
        case 1:
            return ts + " " + r.pick(pids) + " " + r.pick(pids) +
                   " D WindowManager: printFreezingDisplayLogsopening app allDrawn= false, "
                   "startingDisplayed= false";
        default:
            return ts + " " + r.pick(pids) + " " + r.pick(pids) + " I chatty: uid=10084 " +
                   "com.tencent.mm expire " + std::to_string(r.range(1, 20)) + " lines";
    }
}

const std::map<std::string, std::pair<std::uint32_t, Gen>>& generators() {
    static const std::map<std::string, std::pair<std::uint32_t, Gen>> g = {
        {"Android", {101, gen_android}},     {"Apache", {102, gen_apache}},
        {"BGL", {103, gen_bgl}},             {"HDFS", {104, gen_hdfs}},
        {"HPC", {105, gen_hpc}},             {"Hadoop", {106, gen_hadoop}},
        {"HealthApp", {107, gen_healthapp}}, {"Linux", {108, gen_linux}},
        {"Mac", {109, gen_mac}},             {"OpenSSH", {110, gen_openssh}},
        {"OpenStack", {111, gen_openstack}}, {"Proxifier", {112, gen_proxifier}},
        {"Spark", {113, gen_spark}},         {"Thunderbird", {114, gen_thunderbird}},
        {"Windows", {115, gen_windows}},     {"Zookeeper", {116, gen_zookeeper}},
    };
    return g;
}

}  // namespace

const std::vector<std::string>& sample_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, gen] : generators()) v.push_back(name);
        return v;
    }();
    return names;
}

const std::vector<std::string>& structured_rich_names() {
    static const std::vector<std::string> names = {"HPC", "Zookeeper", "HealthApp", "Apache"};
    return names;
}

std::string sample(const std::string& name) {
    const auto it = generators().find(name);
    if (it == generators().end()) throw std::invalid_argument("unknown sample: " + name);
    return render(it->second.second, 2000, it->second.first);
}

std::string numeric_heavy(std::size_t lines) {
    Rng r(4242);
    std::string out;
    out.reserve(lines * 80);
    for (std::size_t i = 0; i < lines; ++i) {
        out += "m " + std::to_string(1500000000 + i * 7);
        for (int k = 0; k < 10; ++k) out += " " + std::to_string(r.range(100, 999999));
        out += '\n';
    }
    return out;
}

std::string throughput_log(std::size_t lines) {
    Rng r(777);
    std::string out;
    out.reserve(lines * 96);
    for (std::size_t i = 0; i < lines; ++i) {
        out += gen_spark(i, lines, r);
        out += '\n';
    }
    return out;
}

std::string fuzz_input(std::uint32_t seed) {
    Rng r(seed ^ 0x9e3779b9u);
    const std::size_t style = r.g() % 5;
    std::string out;
    switch (style) {
        case 0: {  // raw byte noise
            const std::size_t len = r.range(0, 2048);
            out.reserve(len);
            for (std::size_t i = 0; i < len; ++i) out.push_back(static_cast<char>(r.g() & 0xFF));
            break;
        }
        case 1: {  // ASCII lines, possibly without trailing newline
            const std::size_t n = r.range(0, 40);
            for (std::size_t i = 0; i < n; ++i) {
                const std::size_t len = r.range(0, 80);
                for (std::size_t k = 0; k < len; ++k)
                    out.push_back(static_cast<char>(r.range(32, 126)));
                if (i + 1 < n || r.g() % 2) out.push_back('\n');
            }
            break;
        }
        case 2: {  // binary blob without newlines
            const std::size_t len = r.range(1, 512);
            for (std::size_t i = 0; i < len; ++i) {
                char c = static_cast<char>(r.g() & 0xFF);
                if (c == '\n') c = ' ';
                out.push_back(c);
            }
            break;
        }
        case 3: {  // log-ish lines with hostile tokens
            const std::size_t n = r.range(1, 30);
            static const std::vector<std::string> nasty = {
                "<*>", "<a>", "<a12>", "|g0|", "|g15|", "\x01literal", "0007", "00", "",
                "18446744073709551615", "999999999999999999999", "a\tb", "\xff\xfe",
            };
            for (std::size_t i = 0; i < n; ++i) {
                out += std::to_string(r.range(0, 9999));
                out += ' ';
                out += nasty[r.g() % nasty.size()];
                out += " x-";
                out += std::to_string(r.range(0, 99));
                out += '\n';
            }
            break;
        }
        default:  // tiny edge cases
            switch (r.g() % 4) {
                case 0: out = ""; break;
                case 1: out = "\n"; break;
                case 2: out = "\n\n\n"; break;
                default: out = std::string(3, '\x00') + "\n\x01\n"; break;
            }
            break;
    }
    return out;
}

}  // namespace corpus
