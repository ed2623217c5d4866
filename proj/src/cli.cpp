#include "hopf2x/cli.hpp"

#include <functional>
#include <map>

#include "hopf2x/peiffer.hpp"

namespace hopf2x {

namespace {

using Accept = std::function<bool(const Entry&)>;

template <class... T>
Accept accepts()
{
    return [](const Entry& e) { return (std::holds_alternative<T>(e) || ...); };
}

std::string kinds_text(const Bundle& b, const Accept& ok)
{
    std::string s;
    for (const auto& [n, e] : b.entries)
        if (ok(e)) s += (s.empty() ? "" : ", ") + n;
    return s.empty() ? "none" : s;
}

// The --name entry, or the only entry of an accepted type.
const std::string& pick(const Bundle& b, CommandOptions& o, const Accept& ok, std::string_view what)
{
    if (o.name) {
        if (!ok(b.at(*o.name)))
            throw UsageError("entry \"" + *o.name + "\" is a " + std::string(entry_type(b.at(*o.name))) + ", expected " +
                             std::string(what));
        return b.entries.find(*o.name)->first;
    }
    const std::string* found = nullptr;
    for (const auto& [n, e] : b.entries) {
        if (!ok(e)) continue;
        if (found) throw UsageError("several candidate entries (" + kinds_text(b, ok) + "); pass --name");
        found = &n;
    }
    if (!found) throw UsageError("bundle has no " + std::string(what) + " entry");
    o.name = *found;
    return *found;
}

// Simplicial objects directly, crossed modules through g1, 2-crossed through g2.
TruncatedSimplicialHopf as_simplicial(const Entry& e)
{
    if (const auto* t = std::get_if<TruncatedSimplicialHopf>(&e)) return *t;
    if (const auto* x = std::get_if<HopfXMod>(&e)) return g1(*x);
    return g2(std::get<Hopf2XMod>(e));
}

const Accept simplicial_like = accepts<TruncatedSimplicialHopf, HopfXMod, Hopf2XMod>();
constexpr std::string_view simplicial_what = "simplicial, xmod or 2xmod";

Bundle one_entry(const std::string& name, Entry e)
{
    Bundle b;
    b.entries.emplace(name, std::move(e));
    return b;
}

std::string join(const std::vector<std::string>& xs)
{
    std::string s;
    for (const auto& x : xs) s += (s.empty() ? "" : " ") + x;
    return s;
}

CommandResult check_hopf(const Bundle& b, CommandOptions& o)
{
    CommandResult r;
    if (!o.name) {
        for (const auto& [n, e] : b.entries)
            if (const auto* h = std::get_if<HopfAlgebra>(&e)) r.report.merge(verify_hopf(*h), n);
        if (r.report.size() == 0) throw UsageError("bundle has no hopf entry");
        return r;
    }
    const Entry& e = b.at(*o.name);
    if (const auto* h = std::get_if<HopfAlgebra>(&e))
        r.report = verify_hopf(*h);
    else if (const auto* f = std::get_if<HopfMorphism>(&e))
        r.report = verify_morphism(*f);
    else if (const auto* a = std::get_if<ActionTensor>(&e))
        r.report = verify_module_bialgebra(*a);
    else
        throw UsageError("check-hopf takes a hopf, morphism or action entry");
    return r;
}

CommandResult moore(const Bundle& b, CommandOptions& o)
{
    const TruncatedSimplicialHopf t = as_simplicial(b.at(pick(b, o, simplicial_like, simplicial_what)));
    MooreComplex m = moore_complex(t, o.mode);
    CommandResult r;
    r.report = m.report;
    std::size_t length = 0;
    for (std::size_t k = 0; k < m.terms.size(); ++k) {
        r.report.pass("NH" + std::to_string(k), "Moore complex / NH_k = ∩_{i<k} HKer(d_i)",
                      "dim " + std::to_string(m.terms[k].dim()) + " in " + std::to_string(m.terms[k].ambient()));
        if (k > 0 && m.terms[k].dim() > 1) length = k;
    }
    r.report.merge(verify_normal_chain(m, t), "chain");
    r.report.pass("length", "Moore complex / length", "length ≤ " + std::to_string(length) + " through level " +
                                                          std::to_string(t.truncation()));
    return r;
}

CommandResult peiffer(const Bundle& b, CommandOptions& o)
{
    CommandResult r;
    std::vector<std::string> s, p;
    for (const auto& a : enumerate_s(o.n)) s.push_back(a.str());
    for (const auto& q : enumerate_p(o.n)) p.push_back(q.alpha.str() + q.beta.str());
    r.report.pass("S(" + std::to_string(o.n) + ")", "Peiffer pairings / S(n)", join(s));
    r.report.pass("P(" + std::to_string(o.n) + ")", "Peiffer pairings / P(n)", join(p));
    if (o.closed_forms)
        r.report.merge(closed_form_check(as_simplicial(b.at(pick(b, o, simplicial_like, simplicial_what))), o.n),
                       "closed-forms");
    return r;
}

CommandResult roundtrip(const Bundle& b, CommandOptions& o)
{
    CommandResult r;
    if (o.level == 1) {
        const Entry& e = b.at(pick(b, o, accepts<HopfXMod, TruncatedSimplicialHopf>(), "xmod or simplicial"));
        if (const auto* x = std::get_if<HopfXMod>(&e))
            r.report = roundtrip_check(*x);
        else
            r.report = roundtrip_check(std::get<TruncatedSimplicialHopf>(e), 1);
    } else if (o.level == 2) {
        const Entry& e = b.at(pick(b, o, accepts<Hopf2XMod, TruncatedSimplicialHopf>(), "2xmod or simplicial"));
        if (const auto* x = std::get_if<Hopf2XMod>(&e))
            r.report = roundtrip_check(*x);
        else
            r.report = roundtrip_check(std::get<TruncatedSimplicialHopf>(e), 2);
    } else {
        throw UsageError("--level must be 1 or 2");
    }
    return r;
}

CommandResult gl(const Bundle& b, CommandOptions& o)
{
    const std::string& n = pick(b, o, accepts<HopfAlgebra, Hopf2XMod>(), "hopf or 2xmod");
    CommandResult r;
    if (const auto* h = std::get_if<HopfAlgebra>(&b.at(n))) {
        FiniteGroup g = gl_project(*h);
        r.report.pass("group-likes", "Gl / group-like elements", "order " + std::to_string(g.order()));
        r.built = one_entry("gl", std::move(g));
    } else {
        Group2XMod g = gl_2xmod(std::get<Hopf2XMod>(b.at(n)));
        r.report = verify_group_2xmod(g);
        r.built = one_entry("gl", std::move(g));
    }
    return r;
}

CommandResult prim(const Bundle& b, CommandOptions& o)
{
    const std::string& n = pick(b, o, accepts<HopfAlgebra, Hopf2XMod>(), "hopf or 2xmod");
    CommandResult r;
    if (const auto* h = std::get_if<HopfAlgebra>(&b.at(n))) {
        LieAlgebra g = prim_project(*h);
        r.report = verify_lie(g);
        r.report.pass("primitives", "Prim / primitive elements", "dim " + std::to_string(g.dim()));
        r.built = one_entry("prim", std::move(g));
    } else {
        Lie2XMod g = prim_2xmod(std::get<Hopf2XMod>(b.at(n)));
        r.report = verify_lie_2xmod(g);
        r.built = one_entry("prim", std::move(g));
    }
    return r;
}

using Handler = std::function<CommandResult(const Bundle&, CommandOptions&)>;

const std::map<std::string_view, Handler>& handlers()
{
    static const std::map<std::string_view, Handler> h{
        {"check-hopf", check_hopf},
        {"check-xmod",
         [](const Bundle& b, CommandOptions& o) {
             const auto& x = b.get<HopfXMod>(pick(b, o, accepts<HopfXMod>(), "xmod"));
             return CommandResult{verify_xmod(x, o.precrossed ? XModMode::precrossed : XModMode::crossed), {}};
         }},
        {"check-2xmod",
         [](const Bundle& b, CommandOptions& o) {
             return CommandResult{verify_2xmod(b.get<Hopf2XMod>(pick(b, o, accepts<Hopf2XMod>(), "2xmod"))), {}};
         }},
        {"check-group-2xmod",
         [](const Bundle& b, CommandOptions& o) {
             return CommandResult{
                 verify_group_2xmod(b.get<Group2XMod>(pick(b, o, accepts<Group2XMod>(), "group_2xmod"))), {}};
         }},
        {"check-lie-2xmod",
         [](const Bundle& b, CommandOptions& o) {
             return CommandResult{verify_lie_2xmod(b.get<Lie2XMod>(pick(b, o, accepts<Lie2XMod>(), "lie_2xmod"))),
                                  {}};
         }},
        {"moore", moore},
        {"peiffer", peiffer},
        {"decompose",
         [](const Bundle& b, CommandOptions& o) {
             return CommandResult{
                 decomposition_check(as_simplicial(b.at(pick(b, o, simplicial_like, simplicial_what))), o.k), {}};
         }},
        {"x1",
         [](const Bundle& b, CommandOptions& o) {
             X1Result x = x1(b.get<TruncatedSimplicialHopf>(
                 pick(b, o, accepts<TruncatedSimplicialHopf>(), "simplicial")));
             return CommandResult{std::move(x.report), one_entry("x1", std::move(x.xmod))};
         }},
        {"g1",
         [](const Bundle& b, CommandOptions& o) {
             TruncatedSimplicialHopf t = g1(b.get<HopfXMod>(pick(b, o, accepts<HopfXMod>(), "xmod")));
             Report r = verify_simplicial(t);
             return CommandResult{std::move(r), one_entry("g1", std::move(t))};
         }},
        {"x2",
         [](const Bundle& b, CommandOptions& o) {
             X2Result x = x2(b.get<TruncatedSimplicialHopf>(
                 pick(b, o, accepts<TruncatedSimplicialHopf>(), "simplicial")));
             return CommandResult{std::move(x.report), one_entry("x2", std::move(x.xmod))};
         }},
        {"g2",
         [](const Bundle& b, CommandOptions& o) {
             TruncatedSimplicialHopf t = g2(b.get<Hopf2XMod>(pick(b, o, accepts<Hopf2XMod>(), "2xmod")));
             Report r = verify_simplicial(t);
             return CommandResult{std::move(r), one_entry("g2", std::move(t))};
         }},
        {"roundtrip", roundtrip},
        {"gl", gl},
        {"prim", prim},
        {"linearize",
         [](const Bundle& b, CommandOptions& o) {
             Hopf2XMod x = linearize_group_2xmod(
                 b.get<Group2XMod>(pick(b, o, accepts<Group2XMod>(), "group_2xmod")), o.field);
             Report r = verify_2xmod(x);
             return CommandResult{std::move(r), one_entry("linearized", std::move(x))};
         }},
        {"appendix",
         [](const Bundle& b, CommandOptions& o) {
             return CommandResult{
                 appendix_checks(as_simplicial(b.at(pick(b, o, simplicial_like, simplicial_what)))), {}};
         }},
        {"skernel",
         [](const Bundle& b, CommandOptions& o) {
             TruncatedSimplicialHopf t = simplicial_kernel_step(
                 b.get<TruncatedSimplicialHopf>(pick(b, o, accepts<TruncatedSimplicialHopf>(), "simplicial")));
             Report r = verify_simplicial(t);
             return CommandResult{std::move(r), one_entry("skernel", std::move(t))};
         }},
    };
    return h;
}

}  // namespace

const std::vector<std::string_view>& command_names()
{
    static const std::vector<std::string_view> names{
        "check-hopf", "check-xmod", "check-2xmod", "check-group-2xmod", "check-lie-2xmod", "moore",
        "peiffer",    "decompose",  "x1",          "g1",                "x2",              "g2",
        "roundtrip",  "gl",         "prim",        "linearize",         "appendix",        "skernel"};
    return names;
}

CommandResult run_command(std::string_view cmd, const Bundle& bundle, const CommandOptions& options)
{
    auto it = handlers().find(cmd);
    if (it == handlers().end()) throw UsageError("unknown command \"" + std::string(cmd) + "\"");
    CommandOptions opts = options;  // pick() records the chosen entry here
    CommandResult res = it->second(bundle, opts);

    // flags raised on load by anything the target depends on
    std::set<std::string> scope;
    if (opts.name) {
        scope = bundle.reachable(*opts.name);
        if (cmd != "check-hopf") scope.insert(*opts.name);
    } else if (cmd == "check-hopf") {
        for (const auto& [n, e] : bundle.entries)
            if (std::holds_alternative<HopfAlgebra>(e)) scope.merge(bundle.reachable(n));
        for (const auto& [n, e] : bundle.entries)
            if (std::holds_alternative<HopfAlgebra>(e)) scope.erase(n);
    }
    Report flags;
    for (const auto& n : scope) {
        auto v = bundle.validation.find(n);
        if (v == bundle.validation.end()) continue;
        for (const auto& rec : v->second.records())
            if (rec.status == Status::fail) {
                CheckRecord c = rec;
                c.id = "load/" + n + "/" + c.id;
                flags.add(std::move(c));
            }
    }
    if (flags.size() > 0) {
        flags.merge(res.report);
        res.report = std::move(flags);
    }
    return res;
}

}  // namespace hopf2x
