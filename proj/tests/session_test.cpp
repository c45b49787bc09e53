#include "codim1/runner.hpp"

#include <doctest.h>
#include <json.hpp>

#include <fstream>
#include <random>
#include <sstream>

using namespace codim1;

namespace {

RingPtr qring(std::initializer_list<const char*> vars) {
    return PolyRing::make(std::vector<std::string>(vars.begin(), vars.end()),
                          CoeffField::rationals());
}

std::string diag_of(const std::string& text) {
    try {
        parse_session(text);
    } catch (const input_error& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_SUITE("session") {

TEST_CASE("polynomial expressions parse to canonical polynomials") {
    RingPtr r = qring({"x", "y", "z"});
    auto x = Polynomial::variable(r, 0);
    auto y = Polynomial::variable(r, 1);
    auto z = Polynomial::variable(r, 2);
    auto c = [&](long n) { return Polynomial::constant(r, Scalar::from_int(r->field(), n)); };

    CHECK(parse_polynomial("x^2*y - 3*z + 1", r) == x.pow(2) * y - c(3) * z + c(1));
    CHECK(parse_polynomial("-x + x", r).is_zero());
    CHECK(parse_polynomial("(x + y)*(x - y)", r) == x * x - y * y);
    CHECK(parse_polynomial("x/2 + x/2", r) == x);
    CHECK(parse_polynomial("2*x/4", r) ==
          x * (Scalar::from_int(r->field(), 1) / Scalar::from_int(r->field(), 2)));
    CHECK(parse_polynomial("  # nothing but a comment first\n x ", r) == x);
    CHECK(parse_polynomial("((((x))))", r) == x);
    CHECK(parse_polynomial("x^0", r) == c(1));
    CHECK(parse_polynomial("0", r).is_zero());

    SUBCASE("printing is re-parseable") {
        Polynomial p = x.pow(3) * z - y * z.pow(2) + c(7) * x - c(2);
        CHECK(parse_polynomial(p.str(), r) == p);
    }
}

TEST_CASE("polynomial parser rejects malformed input with located diagnostics") {
    RingPtr r = qring({"x", "y"});
    auto expect_fail = [&](const std::string& text, const std::string& fragment) {
        try {
            parse_polynomial(text, r);
            FAIL("no diagnostic for: ", text);
        } catch (const input_error& e) {
            std::string msg = e.what();
            CAPTURE(text);
            CAPTURE(msg);
            CHECK(msg.find("line ") != std::string::npos);
            CHECK(msg.find(fragment) != std::string::npos);
        }
    };
    expect_fail("w + 1", "unknown variable 'w'");
    expect_fail("x^100", "exponent must be between 0 and 64");
    expect_fail("x/0", "division by zero");
    expect_fail("x/y", "integer denominator");
    expect_fail("x y", "trailing input");
    expect_fail("x +", "expected a variable, an integer, or '('");
    expect_fail("(x", "expected ')'");
    expect_fail("", "expected a variable, an integer, or '('");
    expect_fail("x^2^2", "trailing input"); // exponents do not chain
    expect_fail("x ? y", "unexpected character '?'");
    expect_fail("12345678901234567890", "integer literal too large");
    expect_fail(std::string(300, '(') + "x" + std::string(300, ')'),
                "nested too deeply");
}

TEST_CASE("builtin sessions parse and render as a fixpoint") {
    for (const auto& [name, text] : builtin_sessions()) {
        CAPTURE(name);
        Session s = parse_session(text);
        CHECK(s.tasks.size() == 1);
        CHECK(!s.order.empty());
        std::string one = render_session(s);
        Session s2 = parse_session(one);
        std::string two = render_session(s2);
        CHECK(one == two);
        CHECK(s2.tasks.size() == s.tasks.size());
        CHECK(s2.order.size() == s.order.size());
    }
}

TEST_CASE("bundled session files agree with the builtin copies") {
    for (const auto& [name, text] : builtin_sessions()) {
        CAPTURE(name);
        std::ifstream in(std::string(CODIM1_PAPER_DIR) + "/" + name + ".session");
        REQUIRE(in.good());
        std::ostringstream ss;
        ss << in.rdbuf();
        CHECK(render_session(parse_session(ss.str())) ==
              render_session(parse_session(text)));
    }
}

TEST_CASE("names are unique and declarations precede use") {
    CHECK(diag_of("ring r = Q[x]\nring r = Q[y]\n").find("duplicate name 'r'") !=
          std::string::npos);
    CHECK(diag_of("ring r = Q[x]\nalgebra r = r / ()\n").find("duplicate name 'r'") !=
          std::string::npos);
    CHECK(diag_of("ideal a in A = (x)\n").find("unknown algebra 'A'") != std::string::npos);
    CHECK(diag_of("algebra A = r / ()\n").find("unknown ring 'r'") != std::string::npos);
    CHECK(diag_of("witness w = map m height 2\n").find("unknown map 'm'") !=
          std::string::npos);
    CHECK(diag_of("certificate c for a { section { (1, 1) } }\n").find("unknown ideal 'a'") !=
          std::string::npos);
    CHECK(diag_of("embedding e for M = split 0 1 images (1) intersection\n")
              .find("unknown monoid 'M'") != std::string::npos);
    CHECK(diag_of("class c in L = H\n").find("unknown lattice 'L'") != std::string::npos);
    CHECK(diag_of("config c in L { }\n").find("unknown lattice 'L'") != std::string::npos);
    CHECK(diag_of("task surface c\n").find("unknown config 'c'") != std::string::npos);
    CHECK(diag_of("task ledger a\n").find("unknown ideal 'a'") != std::string::npos);
}

TEST_CASE("cross-references are validated at parse time") {
    const std::string base = "ring r = Q[x, y]\n"
                             "algebra A = r / () domain\n"
                             "ideal a in A = (x)\n"
                             "ideal b in A = (y)\n"
                             "certificate c for b { section { (1, 1) } }\n";
    SUBCASE("certificate must be for the task's ideal") {
        CHECK(diag_of(base + "task ledger a using c\n")
                  .find("certificate 'c' is for ideal 'b', not 'a'") != std::string::npos);
        CHECK(diag_of(base + "task ledger b using c\n").empty());
    }
    SUBCASE("evidence must be a witness or a certificate") {
        CHECK(diag_of(base + "task ledger a using b\n").find("unknown evidence 'b'") !=
              std::string::npos);
    }
    SUBCASE("map images cover every source variable exactly once") {
        CHECK(diag_of(base + "map f : A -> A { x -> x }\n").find("no image for source variable 'y'") !=
              std::string::npos);
        CHECK(diag_of(base + "map f : A -> A { x -> x, x -> y, y -> y }\n")
                  .find("assigned twice") != std::string::npos);
        CHECK(diag_of(base + "map f : A -> A { x -> y, y -> x }\n").empty());
    }
    SUBCASE("monoid-affine subject must live in the embedding's monoid") {
        const std::string mon =
            "monoid M = rank 1 generators (1) positive normal\n"
            "embedding e for M = split 0 1 images (1) intersection\n";
        CHECK(diag_of(base + mon + "task monoid-affine a via e\n")
                  .find("not in monoid 'M'") != std::string::npos);
        CHECK(diag_of(mon + "ideal a in M = (x1)\ntask monoid-affine a via e\n").empty());
    }
    SUBCASE("config classes must be effective and in the same lattice") {
        const std::string lat = "lattice L = blowup 1\n"
                                "class E in L = E1\n";
        CHECK(diag_of(base + lat + "config k in L { component E coeff 1 }\ntask surface k\n")
                  .find("must be declared effective") != std::string::npos);
    }
    SUBCASE("purity map must start at the ideal's algebra") {
        const std::string two = base +
                                "ring r2 = Q[u, v]\n"
                                "algebra B = r2 / () domain factorial\n"
                                "map g : B -> B { u -> u, v -> v }\n";
        CHECK(diag_of(two + "task purity a via g\n").find("starts at 'B'") !=
              std::string::npos);
    }
}

TEST_CASE("diagnostics carry exact line and column") {
    CHECK(diag_of("ring r = Q[R,,T]\n") == "line 1, column 14: expected a variable name, got ','");
    CHECK(diag_of("ring r = Q[x]\nbogus q = 1\n") ==
          "line 2, column 1: unknown declaration 'bogus'");
    CHECK(diag_of("ring r = Q[x]\nalgebra A = r / (x^99)\n")
              .find("line 2, column 20") != std::string::npos);
    CHECK(diag_of("ring r = Q[x]\nalgebra A = r / (x) unexpected\n")
              .find("line 2, column 21: unknown declaration 'unexpected'") !=
          std::string::npos);
    CHECK(diag_of("ring r = \"Q\"[x]\n").find("coefficient field") != std::string::npos);
    CHECK(diag_of("ring r = Fp(6)[x]\n").find("line 1, column 13") != std::string::npos);
    CHECK(diag_of("ring r = Q[x]\nideal a in A = (x)\n") ==
          "line 2, column 12: unknown algebra 'A'");
}

TEST_CASE("empty and comment-only files give an empty session") {
    for (const char* text : {"", "   \n\t\n", "# only a comment\n# and another\n"}) {
        Session s = parse_session(text);
        CHECK(s.order.empty());
        CHECK(s.tasks.empty());
        CHECK(render_session(s).empty());
    }
}

TEST_CASE("hyphenated keywords lex as expected") {
    const std::string base = "ring r = Q[x, y]\n"
                             "algebra A = r / () domain\n"
                             "ideal a in A = (x, y)\n";
    SUBCASE("sections-finitely-generated flag") {
        Session s = parse_session(base + "task ledger a sections-finitely-generated\n");
        REQUIRE(s.tasks.size() == 1);
        CHECK(s.tasks[0].sections_finitely_generated);
        CHECK(s.tasks[0].evidence.empty());
    }
    SUBCASE("an evidence name may be called sections") {
        const std::string w = "map f : A -> A { x -> x, y -> y }\n"
                              "witness sections = map f height 1\n";
        Session s = parse_session(base + w + "task ledger a using sections\n");
        REQUIRE(s.tasks.size() == 1);
        REQUIRE(s.tasks[0].evidence.size() == 1);
        CHECK(s.tasks[0].evidence[0] == "sections");
        CHECK(!s.tasks[0].sections_finitely_generated);
    }
    SUBCASE("unterminated strings are rejected") {
        CHECK(diag_of("lattice L = blowup 0\nconfig c in L { assume \"oops\n}\n")
                  .find("unterminated string") != std::string::npos);
    }
}

TEST_CASE("parse-time caps reject oversized data") {
    CHECK(diag_of("monoid M = rank 2 generators (65, 0) positive\n")
              .find("generator coordinate out of range") != std::string::npos);
    CHECK(diag_of("monoid M = rank 20 generators (1) positive\n")
              .find("rank must be between 1 and 16") != std::string::npos);
    CHECK(diag_of("lattice L = blowup 100\n").find("between 0 and 64") != std::string::npos);
    CHECK(diag_of("lattice L = matrix [[2000000]] labels (H)\n")
              .find("intersection number out of range") != std::string::npos);
    CHECK(diag_of("lattice L = blowup 1\nclass c in L = 2000000*H\n")
              .find("coefficient out of range") != std::string::npos);
}

TEST_CASE("reports render the same content as text and json lines") {
    const std::string text = "ring r = Q[x, y]\n"
                             "algebra A = r / () domain factorial\n"
                             "ideal a in A = (x)\n"
                             "task ledger a\n";
    RunOutcome out = run_session(parse_session(text));
    CHECK(out.exit_code == 0);
    REQUIRE(out.report.tasks.size() == 1);
    const TaskResult& t = out.report.tasks[0];
    CHECK(t.verdict == "AFFINE");
    CHECK(t.lower == 1);
    CHECK(t.upper == 1);

    std::string txt = render_text(out.report);
    CHECK(txt.find("task ledger a") != std::string::npos);
    CHECK(txt.find("verdict: AFFINE") != std::string::npos);
    CHECK(txt.find("supht(a) = 1") != std::string::npos);

    std::string jl = render_json_lines(out.report);
    std::istringstream lines(jl);
    std::string line;
    std::size_t n = 0;
    while (std::getline(lines, line)) {
        auto j = nlohmann::json::parse(line);
        CHECK(j.at("task") == "ledger");
        CHECK(j.at("subject") == "a");
        CHECK(j.at("verdict") == "AFFINE");
        CHECK(j.at("superheight") == nlohmann::json({1, 1}));
        CHECK(j.at("verdict_tag") == t.verdict_tag);
        CHECK(j.at("notes").size() == t.notes.size());
        ++n;
    }
    CHECK(n == out.report.tasks.size());
}

TEST_CASE("timing fields appear only on request") {
    const std::string text = "ring r = Q[x]\nalgebra A = r / () domain\n"
                             "ideal a in A = (x)\ntask ledger a\n";
    RunOptions quiet;
    CHECK(!run_session(parse_session(text), quiet).report.tasks[0].seconds.has_value());
    RunOptions timed;
    timed.timings = true;
    auto r = run_session(parse_session(text), timed).report.tasks[0];
    REQUIRE(r.seconds.has_value());
    CHECK(*r.seconds >= 0.0);
    CHECK(render_text({{r}}).find("time:") != std::string::npos);
}

TEST_CASE("mutation fuzzing never crashes the parser") {
    std::vector<std::string> corpus;
    for (const auto& [name, text] : builtin_sessions()) {
        (void)name;
        corpus.push_back(text);
    }
    std::mt19937_64 rng(0x5e551011u);
    auto rnd = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

    constexpr int kRounds = 100'000;
    int parsed_ok = 0, rejected = 0;
    for (int round = 0; round < kRounds; ++round) {
        std::string text = corpus[rnd(corpus.size())];
        int edits = 1 + static_cast<int>(rnd(4));
        for (int e = 0; e < edits && !text.empty(); ++e) {
            switch (rnd(5)) {
                case 0: // flip a byte to a random printable character
                    text[rnd(text.size())] = static_cast<char>(32 + rnd(95));
                    break;
                case 1: // flip a byte to an arbitrary byte
                    text[rnd(text.size())] = static_cast<char>(rng() & 0xff);
                    break;
                case 2: // insert a random printable character
                    text.insert(text.begin() + static_cast<std::ptrdiff_t>(rnd(text.size() + 1)),
                                static_cast<char>(32 + rnd(95)));
                    break;
                case 3: // delete a byte
                    text.erase(text.begin() + static_cast<std::ptrdiff_t>(rnd(text.size())));
                    break;
                case 4: // truncate
                    text.resize(rnd(text.size() + 1));
                    break;
            }
        }
        try {
            Session s = parse_session(text);
            // a surviving parse must still render and re-parse
            Session s2 = parse_session(render_session(s));
            (void)s2;
            ++parsed_ok;
        } catch (const error&) {
            ++rejected;
        }
        // any other exception or a crash fails the test by escaping doctest
    }
    CHECK(parsed_ok + rejected == kRounds);
    CHECK(rejected > 0);     // mutations do get caught
    CHECK(parsed_ok > 0);    // some mutations stay harmless (comments, digits)
    MESSAGE("fuzz: ", parsed_ok, " parses survived, ", rejected, " rejected");
}

} // TEST_SUITE
