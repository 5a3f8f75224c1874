#include "hypersum/oeis.hpp"

#include "hypersum/eval.hpp"
#include "test_config.hpp"

#include <doctest.h>
#include <httplib.h>

#include <atomic>
#include <random>
#include <thread>

using namespace hypersum;
using namespace hypersum::oeis;

TEST_CASE("parse_bfile happy path") {
    BFile b = parse_bfile("1 1\n2 4\n3 10", "A000292");
    REQUIRE(b.entries.size() == 3);
    CHECK(b.entries[0] == BFileEntry{Integer(1), Integer(1)});
    CHECK(b.entries[2] == BFileEntry{Integer(3), Integer(10)});
    CHECK(b.value_at(Integer(2)) == Integer(4));
    CHECK(!b.value_at(Integer(9)).has_value());
    // these are F(n,1,2)
    EvalSession s;
    for (const BFileEntry& e : b.entries) {
        CHECK(Integer(s.closed(HypersumQuery(e.index.to_natural(), Natural(1),
                                             Natural(2)))) == e.value);
    }
}

TEST_CASE("parse_bfile comments, blanks, CRLF, negatives") {
    CHECK(parse_bfile("# comment\n1 1").entries.size() == 1);
    CHECK(parse_bfile("  # indented comment\n\n1 1\n\n").entries.size() == 1);
    CHECK(parse_bfile("1 1\r\n2 4\r\n").entries.size() == 2);
    BFile neg = parse_bfile("-2 5\n-1 -7\n0 0");
    CHECK(neg.entries[1].value == Integer(-7));
}

TEST_CASE("parse_bfile malformed lines") {
    CHECK_THROWS_AS(parse_bfile("1 x"), ParseError);
    try {
        parse_bfile("1 1\n2 2 2\n3 3");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_bfile("5"), ParseError);
    CHECK_THROWS_AS(parse_bfile("1 1\n1 2"), ParseError);  // non-increasing index
    CHECK_THROWS_AS(parse_bfile("2 4\n1 1"), ParseError);
}

TEST_CASE("render/parse round-trip") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> step(1, 9);
    std::uniform_int_distribution<long> value(-1000000000L, 1000000000L);
    for (int iter = 0; iter < 50; ++iter) {
        BFile b;
        b.sequence_id = "A000001";
        long index = -5;
        std::uniform_int_distribution<int> len(0, 40);
        int entries = len(rng);
        for (int i = 0; i < entries; ++i) {
            index += step(rng);
            b.entries.push_back({Integer(index), Integer(value(rng))});
        }
        CHECK(parse_bfile(render_bfile(b), b.sequence_id) == b);
    }
}

TEST_CASE("sequence id format") {
    CHECK(valid_sequence_id("A000292"));
    CHECK(valid_sequence_id("A0002920"));  // seven digits
    CHECK(!valid_sequence_id("A999999x"));
    CHECK(!valid_sequence_id("B000292"));
    CHECK(!valid_sequence_id("A00029"));
    CHECK(!valid_sequence_id(""));
    // the format check precedes any I/O
    FetchOptions opts;
    opts.fixture_dir = "/nonexistent";
    CHECK_THROWS_AS(fetch_bfile("A999999x", FetchSource::fixture_dir, opts),
                    std::invalid_argument);
}

TEST_CASE("fixture fetch") {
    FetchOptions opts;
    opts.fixture_dir = testcfg::fixture_dir;

    BFile tetra = fetch_bfile("A000292", FetchSource::fixture_dir, opts);
    CHECK(tetra.entries.size() >= 20);
    CHECK(tetra.value_at(Integer(3)) == Integer(10));

    BFile cubes = fetch_bfile("A000537", FetchSource::fixture_dir, opts);
    CHECK(cubes.value_at(Integer(3)) == Integer(36));

    CHECK_THROWS_AS(fetch_bfile("A123456", FetchSource::fixture_dir, opts), NotFoundError);
}

TEST_CASE("OEIS_FIXTURE_DIR is honored when no explicit dir is given") {
    setenv("OEIS_FIXTURE_DIR", testcfg::fixture_dir.c_str(), 1);
    BFile tetra = fetch_bfile("A000292", FetchSource::fixture_dir);
    CHECK(tetra.value_at(Integer(3)) == Integer(10));
    setenv("OEIS_FIXTURE_DIR", "/nonexistent", 1);
    CHECK_THROWS_AS(fetch_bfile("A000292", FetchSource::fixture_dir), NotFoundError);
    unsetenv("OEIS_FIXTURE_DIR");
}

TEST_CASE("builtin bindings match fixtures for 20 terms") {
    FetchOptions opts;
    opts.fixture_dir = testcfg::fixture_dir;
    REQUIRE(builtin_bindings().size() == 3);
    for (const SequenceBinding& binding : builtin_bindings()) {
        BFile file = fetch_bfile(binding.sequence_id, FetchSource::fixture_dir, opts);
        ComparisonReport report = compare_sequence(binding, file, Natural(20));
        CAPTURE(binding.sequence_id);
        CHECK(report.pass());
        CHECK(report.terms.size() == 20);
        CHECK(report.terms.front().computed == "1");  // F(1,m,k) = 1
    }
}

TEST_CASE("compare_sequence reports mismatches and insufficiency") {
    FetchOptions opts;
    opts.fixture_dir = testcfg::fixture_dir;
    const SequenceBinding& binding = builtin_bindings().front();  // A000292
    BFile file = fetch_bfile(binding.sequence_id, FetchSource::fixture_dir, opts);

    CHECK_THROWS_AS(compare_sequence(binding, file, Natural(1000000)),
                    InsufficientTermsError);

    BFile doctored = file;
    doctored.entries[5].value += Integer(1);  // index 5 -> term n=5
    ComparisonReport report = compare_sequence(binding, doctored, Natural(10));
    CHECK(report.mismatches == 1);
    CHECK(!report.pass());
    CHECK(!report.terms[4].match);
    CHECK(report.terms[4].n == 5);
}

TEST_CASE("OEIS_BASE_URL is honored in remote mode") {
    // No server behind this address; reaching the network layer at the env
    // base URL (rather than oeis.org) is the point.
    setenv("OEIS_BASE_URL", "http://127.0.0.1:1", 1);
    CHECK_THROWS_AS(fetch_bfile("A000292", FetchSource::remote), NetworkError);
    unsetenv("OEIS_BASE_URL");
}

TEST_CASE("remote fetch against a loopback server") {
    FetchOptions fixture_opts;
    fixture_opts.fixture_dir = testcfg::fixture_dir;
    BFile expected = fetch_bfile("A000292", FetchSource::fixture_dir, fixture_opts);
    std::string body = render_bfile(expected);

    httplib::Server server;
    std::atomic<int> tetra_hits{0};
    server.Get("/A000292/b000292.txt",
               [&](const httplib::Request&, httplib::Response& res) {
                   ++tetra_hits;
                   res.set_content(body, "text/plain");
               });
    std::atomic<int> flaky_hits{0};
    server.Get("/A000537/b000537.txt",
               [&](const httplib::Request&, httplib::Response& res) {
                   // first request fails transiently, the retry succeeds
                   if (flaky_hits++ == 0) {
                       res.status = 503;
                   } else {
                       res.set_content("1 1\n2 9\n3 36\n", "text/plain");
                   }
               });

    int port = server.bind_to_any_port("127.0.0.1");
    REQUIRE(port > 0);
    std::thread server_thread([&] { server.listen_after_bind(); });
    server.wait_until_ready();

    FetchOptions remote_opts;
    remote_opts.base_url = "http://127.0.0.1:" + std::to_string(port);

    SUBCASE("identical bodies give identical values") {
        BFile remote = fetch_bfile("A000292", FetchSource::remote, remote_opts);
        CHECK(remote == expected);
        CHECK(tetra_hits == 1);
    }
    SUBCASE("one retry on a transient failure") {
        BFile remote = fetch_bfile("A000537", FetchSource::remote, remote_opts);
        CHECK(remote.value_at(Integer(3)) == Integer(36));
        CHECK(flaky_hits == 2);
    }
    SUBCASE("missing sequences are NotFound") {
        CHECK_THROWS_AS(fetch_bfile("A000332", FetchSource::remote, remote_opts),
                        NotFoundError);
    }

    server.stop();
    server_thread.join();
}
