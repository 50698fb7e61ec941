#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <regex>
#include <sstream>

#include "qracah/sampling.hpp"
#include "qracah/suites.hpp"

using namespace qracah;

namespace {
std::string strip_timing(const std::string& ndjson) {
    static const std::regex k_wall(",\"wall_time\":[^}]*");
    return std::regex_replace(ndjson, k_wall, "");
}
}  // namespace

TEST_CASE("sampling is deterministic per (seed, suite, N, trial)") {
    Rng a = stream_for(99, "racah1", 4, 7);
    Rng b = stream_for(99, "racah1", 4, 7);
    RacahParams pa = sample_racah(4, a, 9);
    RacahParams pb = sample_racah(4, b, 9);
    CHECK(pa.fingerprint() == pb.fingerprint());
    Rng c = stream_for(99, "racah1", 4, 8);
    CHECK(sample_racah(4, c, 9).fingerprint() != pa.fingerprint());
}

TEST_CASE("sampled records always pass validate") {
    for (int N : {0, 3, 6}) {
        Rng rng = stream_for(5, "x", N, 0);
        CHECK(validate(sample_racah(N, rng, 9)).empty());
        CHECK(validate(sample_tratnik(N, rng, 9)).empty());
        CHECK(validate(sample_griffiths(N, rng, 9)).empty());
    }
}

TEST_CASE("bound 2 leaves no admissible reduced fractions") {
    Rng rng(1);
    CHECK_THROWS_AS(sample_root(rng, 2), SamplingExhausted);
}

TEST_CASE("report lines carry the fields in order") {
    IdentityReport r;
    r.suite = "racah1";
    r.identity = "recurrence";
    r.params = "N=2 sq=3/2";
    r.pass = true;
    r.wall_time = 1.25;
    CHECK(r.to_json(false) ==
          "{\"suite\":\"racah1\",\"identity\":\"recurrence\",\"params\":\"N=2 sq=3/2\","
          "\"pass\":true}");
    r.pass = false;
    r.first_failure = std::vector<long>{1, 0};
    r.residual = Rational(-3, 7);
    CHECK(r.to_json(false) ==
          "{\"suite\":\"racah1\",\"identity\":\"recurrence\",\"params\":\"N=2 sq=3/2\","
          "\"pass\":false,\"first_failure\":[1,0],\"residual\":\"-3/7\"}");
    std::string with_t = r.to_json(true);
    CHECK(with_t.find("\"wall_time\":") != std::string::npos);
}

TEST_CASE("qnum suite runs clean and exits zero") {
    SuiteConfig cfg;
    cfg.suites = {"qnum"};
    cfg.trials = 5;
    cfg.seed = 1;
    std::ostringstream out;
    CHECK(run_suites(cfg, out) == 0);
    // 6 identities x 5 trials
    int lines = 0;
    for (char ch : out.str())
        if (ch == '\n') ++lines;
    CHECK(lines == 30);
}

TEST_CASE("identical configs produce byte-identical reports") {
    SuiteConfig cfg;
    cfg.suites = {"qnum", "racah1"};
    cfg.n_max = 2;
    cfg.trials = 2;
    cfg.seed = 42;
    cfg.with_timing = false;
    std::ostringstream a, b;
    CHECK(run_suites(cfg, a) == 0);
    CHECK(run_suites(cfg, b) == 0);
    CHECK(a.str() == b.str());
    CHECK(!a.str().empty());
}

TEST_CASE("timing fields are the only difference between repeat runs") {
    SuiteConfig cfg;
    cfg.suites = {"qnum"};
    cfg.trials = 3;
    cfg.seed = 7;
    std::ostringstream a, b;
    run_suites(cfg, a);
    run_suites(cfg, b);
    CHECK(strip_timing(a.str()) == strip_timing(b.str()));
}

TEST_CASE("mutation mode reports failures and a nonzero exit") {
    SuiteConfig cfg;
    cfg.mutation_test = true;
    cfg.seed = 3;
    std::ostringstream out;
    int rc = run_suites(cfg, out);
    CHECK(rc != 0);
    const std::string s = out.str();
    for (Fault f : kMutationFaults) {
        const std::string tag = std::string("\"suite\":\"mutation:") + fault_name(f) + "\"";
        bool fault_failed = false;
        std::istringstream lines(s);
        std::string line;
        while (std::getline(lines, line))
            if (line.find(tag) != std::string::npos &&
                line.find("\"pass\":false") != std::string::npos)
                fault_failed = true;
        INFO("fault ", fault_name(f));
        CHECK(fault_failed);
    }
    CHECK(active_fault() == Fault::None);  // guard restored the healthy state
}

TEST_CASE("empty suite list yields an empty passing report") {
    SuiteConfig cfg;
    cfg.suites = {};
    std::ostringstream out;
    CHECK(run_suites(cfg, out) == 0);
    CHECK(out.str().empty());
}
