#include "doctest.h"

#include <array>
#include <cstdio>
#include <fstream>
#include <sys/wait.h>

#include "fixtures.hpp"
#include "hopf2x/cli.hpp"

using namespace hopf2x;
using fixtures::Q;

namespace {

const std::string kFixtures = HOPF2X_FIXTURE_DIR;
const std::string kBinary = HOPF2X_BINARY;

Bundle fixture(const std::string& file) { return parse_bundle(kFixtures + "/" + file); }

std::string wrap(const std::string& entries)
{
    return R"({"schema": "hopf2x/1", "entries": {)" + entries + "}}";
}

const std::string kc2_entries = R"(
    "c2": {"type": "group", "builtin": "cyclic", "n": 2},
    "kc2": {"type": "group_algebra", "group": "c2", "field": {"kind": "Q"}})";

CommandOptions named(const std::string& n)
{
    CommandOptions o;
    o.name = n;
    return o;
}

// parse(emit(b)) re-emits to the same bytes
void check_canonical(const Bundle& b)
{
    const std::string once = emit_bundle(b);
    const std::string twice = emit_bundle(parse_bundle_text(once));
    CHECK(once == twice);
}

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args, const std::string& env = {})
{
    const std::string cmd = env + (env.empty() ? "" : " ") + kBinary + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_file(const std::string& name, const std::string& content)
{
    const std::string path = "/tmp/hopf2x_test_" + name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST_CASE("parse_bundle examples")
{
    Bundle b = fixture("c4_c2_xmod.json");
    const auto& x = b.get<HopfXMod>("c4_c2");
    CHECK(verify_xmod(x).ok());
    CHECK(fixtures::same_structure(x.I, fixtures::c4_c2().I));
    CHECK(x.boundary.map() == fixtures::c4_c2().boundary.map());

    CHECK_THROWS_AS(parse_bundle_text(wrap(kc2_entries + R"(,
        "f": {"type": "morphism", "source": "kc2", "target": "nowhere", "map": "zero"})")),
                    UnresolvedReference);

    Bundle q = parse_bundle_text(wrap(R"(
        "h": {"type": "hopf", "field": {"kind": "Q"}, "labels": ["1"], "unit": [[0, "4/6"]],
              "counit": ["1"], "mul": [[[[0, "1"]]]], "comul": [[[0, "1"]]], "antipode": [[[0, "1"]]]})"));
    const Vec one = q.get<HopfAlgebra>("h").one();
    CHECK(one.terms()[0].coef == Scalar(Q(), 2, 3));
    CHECK(emit_bundle(q).find("\"2/3\"") != std::string::npos);
    CHECK(emit_bundle(q).find("4/6") == std::string::npos);
}

TEST_CASE("parse errors")
{
    try {
        parse_bundle_text("{\n  \"schema\": \"hopf2x/1\",\n  \"entries\": {,}\n}");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 15);
    }
    CHECK_THROWS_AS(parse_bundle_text(R"({"schema": "hopf2x/2", "entries": {}})"), BundleError);
    CHECK_THROWS_AS(parse_bundle_text(R"({"entries": {}})"), BundleError);
    CHECK_THROWS_AS(parse_bundle_text(wrap(R"("g": {"type": "group", "labels": ["a", "b"], "table": [[0, 1], [1, 1]]})")),
                    BundleError);
    // non-string scalar
    CHECK_THROWS_AS(parse_bundle_text(wrap(kc2_entries + R"(,
        "f": {"type": "morphism", "source": "kc2", "target": "kc2", "map": [[[0, 1]], [[1, "1"]]]})")),
                    BundleError);
    // circular smash
    CHECK_THROWS_AS(parse_bundle_text(wrap(R"(
        "a": {"type": "action", "acting": "s", "carrier": "s", "kind": "trivial"},
        "s": {"type": "smash", "action": "a"})")),
                    BundleError);
    // references of the wrong type
    CHECK_THROWS_AS(parse_bundle_text(wrap(kc2_entries + R"(,
        "t": {"type": "tensor", "left": "kc2", "right": "c2"})")),
                    BundleError);
    try {
        parse_bundle_text(wrap(kc2_entries + R"(,
            "f": {"type": "morphism", "source": "kc2", "target": "kc2", "map": [[[0, "1"]], [[5, "1"]]]})"));
        FAIL("no error");
    } catch (const BundleError& e) {
        CHECK(e.where() == "f.map[1][0]");
    }
}

TEST_CASE("load-time validation flags broken entries")
{
    Bundle b = fixture("broken_antipode.json");
    REQUIRE(b.validation.count("c2_bad"));
    const CheckRecord* r = b.validation.at("c2_bad").find("antipode");
    REQUIRE(r);
    CHECK(r->status == Status::fail);

    // an xmod over the broken algebra carries the flag into its own report
    const std::string text = wrap(R"(
        "c2_bad": {"type": "hopf", "field": {"kind": "Q"}, "labels": ["e", "g"], "unit": [[0, "1"]],
                   "counit": ["1", "1"], "mul": [[[[0, "1"]], [[1, "1"]]], [[[1, "1"]], [[0, "1"]]]],
                   "comul": [[[0, "1"]], [[3, "1"]]], "antipode": [[[0, "1"]], [[0, "1"]]]},
        "id": {"type": "morphism", "source": "c2_bad", "target": "c2_bad", "map": "identity"},
        "triv": {"type": "action", "acting": "c2_bad", "carrier": "c2_bad", "kind": "trivial"},
        "x": {"type": "xmod", "I": "c2_bad", "H": "c2_bad", "boundary": "id", "action": "triv"})");
    Bundle bx = parse_bundle_text(text);
    CommandResult res = run_command("check-xmod", bx, named("x"));
    const CheckRecord* flag = res.report.find("load/c2_bad/antipode");
    REQUIRE(flag);
    CHECK(flag->status == Status::fail);
    CHECK(exit_code(res.report) == 1);

    Bundle quiet = parse_bundle_text(text, LoadOptions{false});
    CHECK(quiet.validation.empty());
}

TEST_CASE("property: serialization is canonical")
{
    for (const std::string f : {"c4_c2_xmod.json", "c2c4c2.json", "d4fix.json", "restricted_f2.json",
                                "broken_antipode.json"})
        check_canonical(fixture(f));

    Bundle built;
    built.entries.emplace("g1", g1(fixtures::c4_c2()));
    built.entries.emplace("s3", fixtures::identity_xmod(group_algebra(FiniteGroup::symmetric3(), Q())));
    built.entries.emplace("self", fixtures::self_2xmod(fixtures::restricted_xy()));
    built.entries.emplace("gx", fixtures::d4());
    built.entries.emplace("lie", prim_2xmod(fixtures::self_2xmod(fixtures::restricted_xy())));
    built.entries.emplace("g2", g2(linearize_group_2xmod(fixtures::c2c4c2(), Q())));
    check_canonical(built);

    // the parsed copy carries the same structure constants
    Bundle back = parse_bundle_text(emit_bundle(built));
    const auto& t0 = std::get<TruncatedSimplicialHopf>(built.entries.at("g2"));
    const auto& t1 = back.get<TruncatedSimplicialHopf>("g2");
    REQUIRE(t1.truncation() == 3);
    for (std::size_t k = 0; k <= 2; ++k) CHECK(fixtures::same_structure(t0.levels[k], t1.levels[k]));
    CHECK(t1.levels[3].dim() == 1024);
    for (std::size_t i = 0; i <= 3; ++i) CHECK(t0.d(3, i).map() == t1.d(3, i).map());
    CHECK(back.get<Group2XMod>("gx").lift == fixtures::d4().lift);
}

TEST_CASE("run_command examples")
{
    Bundle d4 = fixture("d4fix.json");
    CommandOptions rt = named("d4fix");
    rt.level = 2;
    Report r = run_command("roundtrip", d4, rt).report;
    CHECK(r.ok());
    CHECK(r.count(Status::fail) == 0);

    Bundle c2c4c2 = fixture("c2c4c2.json");
    CommandOptions pf;
    pf.n = 3;
    pf.closed_forms = true;
    Report p = run_command("peiffer", c2c4c2, pf).report;
    std::size_t forms = 0;
    for (const auto& rec : p.records())
        if (rec.id.rfind("closed-forms/F", 0) == 0 && rec.id.find("in-NH") == std::string::npos) {
            ++forms;
            CHECK(rec.status == Status::pass);
        }
    CHECK(forms == 6);
    CHECK(p.find("S(3)")->note == "∅ (2) (1) (2,1) (0) (2,0) (1,0) (2,1,0)");

    Bundle xm = fixture("c4_c2_xmod.json");
    Report m = run_command("moore", xm, CommandOptions{}).report;
    CHECK(m.find("mode-agreement-1")->status == Status::pass);
    CHECK(m.find("mode-agreement-2")->status == Status::pass);
    CHECK(m.find("NH2")->note == "dim 1 in 32");

    CHECK_THROWS_AS(run_command("frobnicate", xm, CommandOptions{}), UsageError);
    CHECK_THROWS_AS(run_command("check-2xmod", xm, CommandOptions{}), UsageError);
    CHECK_THROWS_AS(run_command("check-xmod", xm, named("kc4")), UsageError);
    // x2 needs a Moore complex of length two and level 3
    CHECK_THROWS_AS(run_command("x2", parse_bundle_text(emit_bundle(*run_command("g1", xm, {}).built)), {}),
                    PreconditionError);
}

TEST_CASE("constructive commands emit bundles")
{
    Bundle xm = fixture("c4_c2_xmod.json");
    CommandResult g = run_command("g1", xm, CommandOptions{});
    CHECK(g.report.ok());
    REQUIRE(g.built);
    Bundle gb = parse_bundle_text(emit_bundle(*g.built));
    CommandResult x = run_command("x1", gb, named("g1"));
    CHECK(x.report.ok());
    Bundle xb = parse_bundle_text(emit_bundle(*x.built));
    const auto& back = xb.get<HopfXMod>("x1");
    CHECK(back.I.dim() == 4);
    CHECK(back.H.dim() == 2);
    CHECK(verify_xmod(back).ok());

    // gl recovers the group fixture label for label
    Bundle d4 = fixture("d4fix.json");
    CommandResult gl = run_command("gl", d4, named("d4fix"));
    CHECK(gl.report.ok());
    const Group2XMod& want = d4.get<Group2XMod>("d4_group");
    const auto& got = std::get<Group2XMod>(gl.built->entries.at("gl"));
    CHECK(got.L == want.L);
    CHECK(got.E == want.E);
    CHECK(got.G == want.G);
    CHECK(got.d2 == want.d2);
    CHECK(got.d1 == want.d1);
    CHECK(got.lift == want.lift);
    CHECK(got.on_E.perm == want.on_E.perm);

    CommandResult lin = run_command("linearize", d4, named("d4_group"));
    CHECK(lin.report.ok());
    const auto& h = std::get<Hopf2XMod>(lin.built->entries.at("linearized"));
    const auto& fix = d4.get<Hopf2XMod>("d4fix");
    CHECK(fixtures::same_structure(h.I, fix.I));
    CHECK(h.d1.map() == fix.d1.map());
    for (Index a = 0; a < 8; ++a)
        for (Index c = 0; c < 8; ++c) CHECK(h.lift.value(a, c) == fix.lift.value(a, c));

    CommandResult pr = run_command("prim", d4, named("d4fix"));
    CHECK(pr.report.ok());
    const auto& lie = std::get<Lie2XMod>(pr.built->entries.at("prim"));
    CHECK(lie.l.dim() + lie.e.dim() + lie.g.dim() == 0);

    Bundle u = fixture("restricted_f2.json");
    CommandResult pu = run_command("prim", u, CommandOptions{});
    CHECK(std::get<LieAlgebra>(pu.built->entries.at("prim")).dim() == 2);

    Bundle c = parse_bundle_text(wrap(kc2_entries + R"(,
        "s": {"type": "simplicial", "constant": "kc2", "truncation": 0})"));
    CommandResult sk = run_command("skernel", c, CommandOptions{});
    CHECK(sk.report.ok());
    CHECK(std::get<TruncatedSimplicialHopf>(sk.built->entries.at("skernel")).levels[1].dim() == 4);
}

TEST_CASE("reports and exit codes")
{
    Report pass;
    pass.pass("a", "anchor");
    CHECK(exit_code(pass) == 0);

    Report fail = pass;
    fail.fail("b", "anchor", Witness{"(x, y)", "lhs", "rhs"});
    CHECK(exit_code(fail) == 1);
    CHECK(emit_text(fail).find("at  (x, y)") != std::string::npos);

    Report skip;
    skip.skip("c", "anchor", "too big");
    CHECK(exit_code(skip) == 0);
    CHECK(emit_text(skip).find("0 pass, 0 fail, 1 skipped") != std::string::npos);

    // full determinism on identical input
    Bundle d4 = fixture("d4fix.json");
    CHECK(emit_json(run_command("check-2xmod", d4, {}).report) == emit_json(run_command("check-2xmod", d4, {}).report));
}

TEST_CASE("hopf2x binary")
{
    const std::string b = "--bundle " + kFixtures + "/";
    Run ok = run("roundtrip --level 2 --name d4fix " + b + "d4fix.json");
    CHECK(ok.code == 0);
    CHECK(ok.out.find(" 0 fail") != std::string::npos);

    Run bad = run("check-hopf " + b + "broken_antipode.json");
    CHECK(bad.code == 1);
    CHECK(bad.out.find("at  ΣS(x')x'' at g") != std::string::npos);

    CHECK(run("frobnicate " + b + "d4fix.json").code == 2);
    CHECK(run("check-hopf").code == 2);
    CHECK(run("check-hopf --bundle /nonexistent.json").code == 2);
    Run syntax = run("check-hopf --format json --bundle " + temp_file("syntax.json", "{\n \"schema\": ,\n}"));
    CHECK(syntax.code == 2);
    CHECK(syntax.out.find("\"line\": 2") != std::string::npos);
    CHECK(run("x2 " + b + "c4_c2_xmod.json").code == 2);
    CHECK(run("peiffer --n 2").code == 0);

    // constructive output round-trips through a file
    const std::string out = "/tmp/hopf2x_test_g1.json";
    CHECK(run("g1 " + b + "c4_c2_xmod.json --out " + out).code == 0);
    CHECK(run("x1 --bundle " + out).code == 0);
    Run js = run("x1 --format json --bundle " + out);
    CHECK(js.code == 0);
    CHECK(js.out.find("\"bundle\": {") != std::string::npos);

    // dimension cap from the environment, overridden by --cap
    const std::string s3 = temp_file("s3.json", wrap(R"(
        "s3": {"type": "group", "builtin": "symmetric3"},
        "ks3": {"type": "group_algebra", "group": "s3", "field": {"kind": "Q"}},
        "id": {"type": "morphism", "source": "ks3", "target": "ks3", "map": "identity"},
        "ad": {"type": "action", "acting": "ks3", "carrier": "ks3", "kind": "adjoint"},
        "x": {"type": "xmod", "I": "ks3", "H": "ks3", "boundary": "id", "action": "ad"})"));
    CHECK(run("moore --mode kernel --bundle " + s3).code == 0);
    Run capped = run("moore --mode kernel --bundle " + s3, "HOPF2X_CAP=30");
    CHECK(capped.code == 2);
    CHECK(capped.out.find("dimension-cap") != std::string::npos);
    CHECK(run("moore --mode kernel --cap 1000 --bundle " + s3, "HOPF2X_CAP=30").code == 0);
    Run skipped = run("moore --mode both --bundle " + s3, "HOPF2X_CAP=30");
    CHECK(skipped.code == 0);
    CHECK(skipped.out.find("skipped  mode-agreement-1") != std::string::npos);
    CHECK(run("moore --cap zero --bundle " + s3).code == 2);

    // serial and parallel runs print the same bytes
    CHECK(run("check-2xmod --format json " + b + "d4fix.json").out ==
          run("check-2xmod --serial --format json " + b + "d4fix.json").out);
}
