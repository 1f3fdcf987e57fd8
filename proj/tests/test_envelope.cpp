#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <string>

#include "envelope.hpp"
#include "gegchain/chain.hpp"
#include "gegchain/dieudonne.hpp"
#include "gegchain/gegenbauer.hpp"
#include "gegchain/matrix.hpp"

using namespace gegchain;
using gegchain::cli::Envelope;

TEST_CASE("table1 payload") {
    const Envelope env = cli::cmd_table1(3, 1.0, 1e-9, 1);
    CHECK(env.at("command") == "table1");
    CHECK(env.at("index_base") == 0);
    CHECK(env.at("format_version") == cli::format_version);

    const Envelope& rows = env.at("payload");
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].at("N") == 1);
    CHECK(rows[0].at("G") == "inf");
    CHECK(rows[0].at("G_prime").is_null());
    CHECK(rows[1].at("G").get<double>() == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(rows[2].at("G").get<double>() == doctest::Approx(0.8164965809).epsilon(1e-7));
    CHECK(rows[2].at("G_prime").is_null());
}

TEST_CASE("table1 with a single row") {
    const Envelope env = cli::cmd_table1(1, 2.5, 1e-9, 0);
    REQUIRE(env.at("payload").size() == 1);
    CHECK(env.at("payload")[0].at("G") == "inf");
}

TEST_CASE("table1 is deterministic across worker counts") {
    const Envelope serial = cli::cmd_table1(5, 1.0, 1e-9, 1);
    const Envelope parallel = cli::cmd_table1(5, 1.0, 1e-9, 4);
    CHECK(serial == parallel);
}

TEST_CASE("fig1 payload") {
    const Envelope env = cli::cmd_fig1(5, -1.0, 1.0, 3, 1.0);
    const Envelope& rows = env.at("payload");
    REQUIRE(rows.size() == 5);

    // middle sample is g = 0: spectrum {1, 2, 2}
    CHECK(rows[2].at("g").get<double>() == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
    CHECK(rows[2].at("p1").get<double>() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rows[2].at("p2").get<double>() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(rows[2].at("p3").get<double>() == doctest::Approx(2.0).epsilon(1e-12));

    // the tracks are even in g
    for (int k = 1; k <= 3; ++k) {
        const std::string key = "p" + std::to_string(k);
        CHECK(rows[0].at(key).get<double>() ==
              doctest::Approx(rows[4].at(key).get<double>()).epsilon(1e-12));
    }

    CHECK_THROWS_AS(cli::cmd_fig1(1, -1.0, 1.0, 3, 1.0), std::invalid_argument);
}

TEST_CASE("dump zeros") {
    const Envelope env = cli::cmd_dump("zeros", 3, 1.0);
    const Envelope& rows = env.at("payload");
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].at("index") == 0);
    CHECK(rows[0].at("energy").get<double>() ==
          doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-10));
    CHECK(std::fabs(rows[1].at("energy").get<double>()) <= 1e-12);
}

TEST_CASE("dump theta0 as sparse triples") {
    const Envelope env = cli::cmd_dump("theta0", 9, 1.0);
    const Envelope& rows = env.at("payload");
    REQUIRE(rows.size() == 9);  // diagonal matrix
    bool found = false;
    for (const Envelope& r : rows)
        if (r.at("row") == 7 && r.at("col") == 7) {
            found = true;
            CHECK(r.at("value").get<double>() == doctest::Approx(0.0003968).epsilon(1e-4));
        }
    CHECK(found);
}

TEST_CASE("dump long-range pseudometric, n = 4") {
    const Envelope env = cli::cmd_dump("plongrange", 4, 1.0);
    auto value_at = [&](int i, int j) -> double {
        for (const Envelope& r : env.at("payload"))
            if (r.at("row") == i && r.at("col") == j) return r.at("value").get<double>();
        FAIL("entry not present");
        return 0.0;
    };
    CHECK(value_at(0, 3) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(value_at(1, 2) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(value_at(2, 3) == doctest::Approx(-2.0 / 3.0).epsilon(1e-12));

    CHECK_THROWS_AS(cli::cmd_dump("plongrange", 5, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(cli::cmd_dump("nonsense", 4, 1.0), std::invalid_argument);
}

TEST_CASE("dumped matrices round-trip into a small residual") {
    for (const char* object : {"theta0", "p1", "p2"}) {
        const std::size_t n = 6;
        const Envelope env = cli::cmd_dump(object, n, 2.0);
        Matrix m(n, n);
        for (const Envelope& r : env.at("payload"))
            m(r.at("row").get<std::size_t>(), r.at("col").get<std::size_t>()) =
                r.at("value").get<double>();
        CHECK(residual(build_hamiltonian(n, GegenbauerParam(2.0)), m) <= 1e-12);
    }
}

TEST_CASE("residual command") {
    const Envelope env = cli::cmd_residual("p2", 10, 1.5);
    CHECK(env.at("payload")[0].at("residual").get<double>() <= 1e-12);
}

TEST_CASE("boundary command") {
    const Envelope env = cli::cmd_boundary(3, 1.0, 0, 1e-9);
    CHECK(env.at("payload")[0].at("g").get<double>() ==
          doctest::Approx(0.8164965809).epsilon(1e-7));
}

TEST_CASE("csv rendering") {
    const Envelope env = cli::cmd_table1(2, 1.0, 1e-9, 1);
    const std::string csv = cli::to_csv(env);
    CHECK(csv.substr(0, csv.find('\n')) == "N,G,G_prime,G_double_prime");
    // nulls render as empty cells; the N=1 row carries the literal inf marker
    CHECK(csv.find("1,inf,,") != std::string::npos);

    // quoting kicks in only when a cell needs it
    Envelope custom{{"payload_columns", Envelope::array({"name"})},
                    {"payload", Envelope::array({Envelope{{"name", "a,b"}}})}};
    CHECK(cli::to_csv(custom) == "name\n\"a,b\"\n");
}

TEST_CASE("identical inputs give identical envelopes") {
    CHECK(cli::cmd_dump("p2", 7, 1.25) == cli::cmd_dump("p2", 7, 1.25));
    CHECK(cli::cmd_fig1(11, -1.0, 1.0, 4, 0.75) == cli::cmd_fig1(11, -1.0, 1.0, 4, 0.75));
}
