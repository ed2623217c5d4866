#include "hopf2x/bundle.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hopf2x {

namespace {

using json = nlohmann::ordered_json;

constexpr std::string_view kSchema = "hopf2x/1";

std::string at_index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

// Byte offset (1-based, as reported by the JSON parser) to line and column.
void line_col(std::string_view text, std::size_t byte, std::size_t& line, std::size_t& col)
{
    line = 1;
    col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
            ++col;
        }
    }
}

// ---- parsing ---------------------------------------------------------------------

class Parser {
public:
    Parser(const json& entries, LoadOptions opts) : src_(entries), opts_(opts) {}

    Bundle run()
    {
        for (const auto& [name, _] : src_.items()) resolve(name, name);
        return std::move(out_);
    }

private:
    const json& src_;
    LoadOptions opts_;
    Bundle out_;
    std::set<std::string> active_;
    std::vector<std::string> stack_;
    std::map<std::string, FiniteGroup> group_of_;  // group algebra entries -> their group

    // ---- small readers ----

    static const json& member(const json& o, const char* key, const std::string& path)
    {
        if (!o.is_object()) throw BundleError(path, "expected an object");
        auto it = o.find(key);
        if (it == o.end()) throw BundleError(path, std::string("missing field \"") + key + "\"");
        return *it;
    }

    static std::string text(const json& j, const std::string& path)
    {
        if (!j.is_string()) throw BundleError(path, "expected a string");
        return j.get<std::string>();
    }

    static std::size_t count(const json& j, const std::string& path)
    {
        if (!j.is_number_unsigned()) throw BundleError(path, "expected a non-negative integer");
        return j.get<std::size_t>();
    }

    static const json& array(const json& j, const std::string& path, std::optional<std::size_t> len = std::nullopt)
    {
        if (!j.is_array()) throw BundleError(path, "expected an array");
        if (len && j.size() != *len)
            throw BundleError(path, "expected " + std::to_string(*len) + " elements, got " + std::to_string(j.size()));
        return j;
    }

    static Field field(const json& j, const std::string& path)
    {
        const std::string kind = text(member(j, "kind", path), path + ".kind");
        if (kind == "Q") return Field::rationals();
        if (kind == "Fp") {
            const std::size_t p = count(member(j, "p", path), path + ".p");
            try {
                return Field::prime(static_cast<std::uint32_t>(p));
            } catch (const Error& e) {
                throw BundleError(path + ".p", e.what());
            }
        }
        throw BundleError(path + ".kind", "unknown field kind \"" + kind + "\"");
    }

    static Scalar scalar(Field f, const json& j, const std::string& path)
    {
        if (!j.is_string()) throw BundleError(path, "scalars are written as strings");
        try {
            return Scalar::parse(f, j.get<std::string>());
        } catch (const Error& e) {
            throw BundleError(path, e.what());
        }
    }

    // Dense: ["1", "0", ...] of length dim. Sparse: [[index, "coef"], ...].
    static Vec vec(Field f, const json& j, std::size_t dim, const std::string& path)
    {
        array(j, path);
        if (!j.empty() && j.front().is_string()) {
            array(j, path, dim);
            std::vector<Scalar> dense;
            for (std::size_t i = 0; i < dim; ++i) dense.push_back(scalar(f, j[i], at_index(path, i)));
            return Vec::from_dense(dense);
        }
        VecBuilder vb;
        std::set<std::size_t> seen;
        for (std::size_t t = 0; t < j.size(); ++t) {
            const std::string p = at_index(path, t);
            array(j[t], p, 2);
            const std::size_t i = count(j[t][0], p + "[0]");
            if (i >= dim) throw BundleError(p, "index " + std::to_string(i) + " out of range " + std::to_string(dim));
            if (!seen.insert(i).second) throw BundleError(p, "index " + std::to_string(i) + " repeated");
            vb.add(i, scalar(f, j[t][1], p + "[1]"));
        }
        return vb.build();
    }

    static std::vector<Vec> columns(Field f, const json& j, std::size_t rows, std::size_t cols, const std::string& path)
    {
        array(j, path, cols);
        std::vector<Vec> out;
        for (std::size_t c = 0; c < cols; ++c) out.push_back(vec(f, j[c], rows, at_index(path, c)));
        return out;
    }

    static Trilinear tri(Field f, const json& j, std::size_t a, std::size_t b, std::size_t c, const std::string& path)
    {
        array(j, path, a);
        for (std::size_t i = 0; i < a; ++i) array(j[i], at_index(path, i), b);
        return Trilinear::build(f, a, b, c, [&](Index i, Index k) {
            return vec(f, j[i][k], c, at_index(at_index(path, i), k));
        });
    }

    static std::vector<std::size_t> ints(const json& j, std::size_t len, const std::string& path)
    {
        array(j, path, len);
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < len; ++i) out.push_back(count(j[i], at_index(path, i)));
        return out;
    }

    static Table table(const json& j, const std::string& path, std::size_t rows, std::size_t cols)
    {
        array(j, path, rows);
        Table t;
        for (std::size_t r = 0; r < rows; ++r) t.push_back(ints(j[r], cols, at_index(path, r)));
        return t;
    }

    static std::vector<std::string> labels(const json& j, const std::string& path)
    {
        array(j, path);
        std::vector<std::string> out;
        for (std::size_t i = 0; i < j.size(); ++i) out.push_back(text(j[i], at_index(path, i)));
        return out;
    }

    // ---- references ----

    const Entry& resolve(const std::string& name, const std::string& from)
    {
        if (!stack_.empty() && stack_.back() != name) out_.deps[stack_.back()].insert(name);
        if (auto it = out_.entries.find(name); it != out_.entries.end()) return it->second;
        if (!src_.contains(name)) throw UnresolvedReference(from, "no entry named \"" + name + "\"");
        if (active_.count(name)) throw BundleError(from, "circular reference through \"" + name + "\"");
        active_.insert(name);
        stack_.push_back(name);
        out_.deps[name];
        Entry e = parse_entry(name, src_[name]);
        stack_.pop_back();
        active_.erase(name);
        return out_.entries.emplace(name, std::move(e)).first->second;
    }

    template <class T>
    const T& ref(const json& o, const char* key, const std::string& path)
    {
        const std::string p = path + "." + key;
        const std::string name = text(member(o, key, path), p);
        const Entry& e = resolve(name, p);
        if (const T* v = std::get_if<T>(&e)) return *v;
        throw BundleError(p, "\"" + name + "\" is a " + std::string(entry_type(e)));
    }

    template <class T>
    T ref_at(const json& j, const std::string& path)
    {
        const std::string name = text(j, path);
        const Entry& e = resolve(name, path);
        if (const T* v = std::get_if<T>(&e)) return *v;
        throw BundleError(path, "\"" + name + "\" is a " + std::string(entry_type(e)));
    }

    const FiniteGroup& group_of(const json& o, const char* key, const std::string& path)
    {
        ref<HopfAlgebra>(o, key, path);
        const std::string name = o[key].get<std::string>();
        auto it = group_of_.find(name);
        if (it == group_of_.end())
            throw BundleError(path + "." + key, "\"" + name + "\" is not declared as a group algebra");
        return it->second;
    }

    void validate(const std::string& name, const std::function<Report()>& run)
    {
        if (opts_.validate) out_.validation[name] = run();
    }

    static void same_space(const HopfAlgebra& a, const HopfAlgebra& b, const std::string& path, const std::string& what)
    {
        if (a.dim() != b.dim() || !(a.field() == b.field()))
            throw BundleError(path, what + " does not match (dimension " + std::to_string(a.dim()) + " vs " +
                                        std::to_string(b.dim()) + ")");
    }

    // ---- entries ----

    Entry parse_entry(const std::string& name, const json& o)
    {
        const std::string type = text(member(o, "type", name), name + ".type");
        try {
            if (type == "group") return group(name, o);
            if (type == "lie") return lie(name, o);
            if (type == "hopf") return hopf(name, o);
            if (type == "trivial_hopf") return trivial_hopf(field(member(o, "field", name), name + ".field"));
            if (type == "group_algebra") {
                const FiniteGroup& g = ref<FiniteGroup>(o, "group", name);
                group_of_[name] = g;
                return group_algebra(g, field(member(o, "field", name), name + ".field"));
            }
            if (type == "tensor") return tensor_hopf(ref<HopfAlgebra>(o, "left", name), ref<HopfAlgebra>(o, "right", name));
            if (type == "smash") return smash_product(ref<ActionTensor>(o, "action", name));
            if (type == "morphism") return morphism(name, o);
            if (type == "group_algebra_hom") return group_hom(name, o);
            if (type == "action") return action(name, o);
            if (type == "xmod") return xmod(name, o);
            if (type == "2xmod") return xmod2(name, o);
            if (type == "group_2xmod") return group_2xmod(name, o);
            if (type == "lie_2xmod") return lie_2xmod(name, o);
            if (type == "simplicial") return simplicial(name, o);
        } catch (const BundleError&) {
            throw;
        } catch (const Error& e) {
            throw BundleError(name, e.what());
        }
        throw BundleError(name + ".type", "unknown entry type \"" + type + "\"");
    }

    Entry group(const std::string& name, const json& o)
    {
        if (o.contains("builtin")) {
            const std::string b = text(o["builtin"], name + ".builtin");
            auto n = [&] { return count(member(o, "n", name), name + ".n"); };
            if (b == "cyclic") return FiniteGroup::cyclic(n());
            if (b == "dihedral") return FiniteGroup::dihedral(n());
            if (b == "symmetric3") return FiniteGroup::symmetric3();
            if (b == "trivial") return FiniteGroup::trivial();
            if (b == "product") {
                const json& f = array(member(o, "factors", name), name + ".factors", 2);
                return FiniteGroup::product(ref_at<FiniteGroup>(f[0], name + ".factors[0]"),
                                            ref_at<FiniteGroup>(f[1], name + ".factors[1]"));
            }
            throw BundleError(name + ".builtin", "unknown builtin group \"" + b + "\"");
        }
        std::vector<std::string> l = labels(member(o, "labels", name), name + ".labels");
        Table t = table(member(o, "table", name), name + ".table", l.size(), l.size());
        return FiniteGroup(std::move(t), std::move(l));
    }

    Entry lie(const std::string& name, const json& o)
    {
        const Field f = field(member(o, "field", name), name + ".field");
        std::vector<std::string> l = labels(member(o, "labels", name), name + ".labels");
        const std::size_t d = l.size();
        LieAlgebra g(tri(f, member(o, "bracket", name), d, d, d, name + ".bracket"), std::move(l));
        validate(name, [&] { return verify_lie(g); });
        return g;
    }

    Entry hopf(const std::string& name, const json& o)
    {
        HopfAlgebra::Data d;
        d.field = field(member(o, "field", name), name + ".field");
        d.labels = labels(member(o, "labels", name), name + ".labels");
        const std::size_t n = d.labels.size();
        const Field f = d.field;
        d.mul = Bilinear(tri(f, member(o, "mul", name), n, n, n, name + ".mul"));
        d.unit = vec(f, member(o, "unit", name), n, name + ".unit");
        d.comul = LinearMap(f, n * n, columns(f, member(o, "comul", name), n * n, n, name + ".comul"));
        const json& eps = array(member(o, "counit", name), name + ".counit", n);
        for (std::size_t i = 0; i < n; ++i) d.counit.push_back(scalar(f, eps[i], at_index(name + ".counit", i)));
        d.antipode = LinearMap(f, n, columns(f, member(o, "antipode", name), n, n, name + ".antipode"));
        const bool flag_given = o.contains("cocommutative");
        if (flag_given) {
            if (!o["cocommutative"].is_boolean()) throw BundleError(name + ".cocommutative", "expected a boolean");
            d.cocommutative = o["cocommutative"].get<bool>();
        }
        HopfAlgebra h(std::move(d));
        if (!flag_given && is_cocommutative(h)) {
            HopfAlgebra::Data dd = h.data();
            dd.cocommutative = true;
            h = HopfAlgebra(std::move(dd));
        }
        validate(name, [&] { return verify_hopf(h); });
        return h;
    }

    Entry morphism(const std::string& name, const json& o)
    {
        const HopfAlgebra& s = ref<HopfAlgebra>(o, "source", name);
        const HopfAlgebra& t = ref<HopfAlgebra>(o, "target", name);
        const json& m = member(o, "map", name);
        if (m.is_string()) {
            const std::string k = m.get<std::string>();
            if (k == "zero") return zero_morphism(s, t);
            if (k == "identity") {
                same_space(s, t, name + ".map", "identity target");
                return HopfMorphism(s, t, LinearMap::identity(s.field(), s.dim()));
            }
            throw BundleError(name + ".map", "unknown map \"" + k + "\"");
        }
        HopfMorphism f(s, t, LinearMap(s.field(), t.dim(), columns(s.field(), m, t.dim(), s.dim(), name + ".map")));
        validate(name, [&] { return verify_morphism(f); });
        return f;
    }

    Entry group_hom(const std::string& name, const json& o)
    {
        const FiniteGroup& gs = group_of(o, "source", name);
        const FiniteGroup& gt = group_of(o, "target", name);
        GroupHom g{gs, gt, ints(member(o, "map", name), gs.order(), name + ".map")};
        for (std::size_t i = 0; i < g.map.size(); ++i)
            if (g.map[i] >= gt.order()) throw BundleError(at_index(name + ".map", i), "element out of range");
        return group_algebra_hom(ref<HopfAlgebra>(o, "source", name), ref<HopfAlgebra>(o, "target", name), g);
    }

    Entry action(const std::string& name, const json& o)
    {
        const HopfAlgebra& acting = ref<HopfAlgebra>(o, "acting", name);
        const HopfAlgebra& carrier = ref<HopfAlgebra>(o, "carrier", name);
        if (o.contains("kind")) {
            const std::string k = text(o["kind"], name + ".kind");
            if (k == "trivial") return trivial_action(acting, carrier);
            if (k == "adjoint") {
                same_space(acting, carrier, name + ".carrier", "adjoint carrier");
                return adjoint_action(acting);
            }
            throw BundleError(name + ".kind", "unknown action kind \"" + k + "\"");
        }
        ActionTensor a;
        if (o.contains("perm")) {
            const FiniteGroup& g = group_of(o, "acting", name);
            const FiniteGroup& e = group_of(o, "carrier", name);
            GroupAction ga{g, e, table(o["perm"], name + ".perm", g.order(), e.order())};
            a = group_algebra_action(acting, carrier, ga);
        } else {
            a = ActionTensor(acting, carrier,
                             Bilinear(tri(acting.field(), member(o, "coeffs", name), acting.dim(), carrier.dim(),
                                          carrier.dim(), name + ".coeffs")));
        }
        validate(name, [&] { return verify_module_bialgebra(a); });
        return a;
    }

    Entry xmod(const std::string& name, const json& o)
    {
        HopfXMod x{ref<HopfAlgebra>(o, "I", name), ref<HopfAlgebra>(o, "H", name),
                   ref<HopfMorphism>(o, "boundary", name), ref<ActionTensor>(o, "action", name)};
        same_space(x.boundary.source(), x.I, name + ".boundary", "boundary source");
        same_space(x.boundary.target(), x.H, name + ".boundary", "boundary target");
        same_space(x.action.acting(), x.H, name + ".action", "acting algebra");
        same_space(x.action.carrier(), x.I, name + ".action", "carrier");
        return x;
    }

    Entry xmod2(const std::string& name, const json& o)
    {
        const HopfAlgebra& K = ref<HopfAlgebra>(o, "K", name);
        const HopfAlgebra& I = ref<HopfAlgebra>(o, "I", name);
        const HopfAlgebra& H = ref<HopfAlgebra>(o, "H", name);
        Hopf2XMod x{K, I, H,
                    ref<HopfMorphism>(o, "d2", name), ref<HopfMorphism>(o, "d1", name),
                    ref<ActionTensor>(o, "on_I", name), ref<ActionTensor>(o, "on_K", name),
                    Bilinear(tri(I.field(), member(o, "lift", name), I.dim(), I.dim(), K.dim(), name + ".lift"))};
        same_space(x.d2.source(), K, name + ".d2", "d2 source");
        same_space(x.d2.target(), I, name + ".d2", "d2 target");
        same_space(x.d1.source(), I, name + ".d1", "d1 source");
        same_space(x.d1.target(), H, name + ".d1", "d1 target");
        same_space(x.on_I.acting(), H, name + ".on_I", "acting algebra");
        same_space(x.on_I.carrier(), I, name + ".on_I", "carrier");
        same_space(x.on_K.acting(), H, name + ".on_K", "acting algebra");
        same_space(x.on_K.carrier(), K, name + ".on_K", "carrier");
        return x;
    }

    Entry group_2xmod(const std::string& name, const json& o)
    {
        const FiniteGroup& L = ref<FiniteGroup>(o, "L", name);
        const FiniteGroup& E = ref<FiniteGroup>(o, "E", name);
        const FiniteGroup& G = ref<FiniteGroup>(o, "G", name);
        Group2XMod x{L, E, G,
                     ints(member(o, "d2", name), L.order(), name + ".d2"),
                     ints(member(o, "d1", name), E.order(), name + ".d1"),
                     GroupAction{G, L, table(member(o, "on_L", name), name + ".on_L", G.order(), L.order())},
                     GroupAction{G, E, table(member(o, "on_E", name), name + ".on_E", G.order(), E.order())},
                     table(member(o, "lift", name), name + ".lift", E.order(), E.order())};
        auto bounded = [&](const std::vector<std::size_t>& v, std::size_t n, const std::string& p) {
            for (std::size_t i = 0; i < v.size(); ++i)
                if (v[i] >= n) throw BundleError(at_index(p, i), "element out of range");
        };
        bounded(x.d2, E.order(), name + ".d2");
        bounded(x.d1, G.order(), name + ".d1");
        for (std::size_t e = 0; e < x.lift.size(); ++e) bounded(x.lift[e], L.order(), at_index(name + ".lift", e));
        return x;
    }

    Entry lie_2xmod(const std::string& name, const json& o)
    {
        const LieAlgebra& l = ref<LieAlgebra>(o, "l", name);
        const LieAlgebra& e = ref<LieAlgebra>(o, "e", name);
        const LieAlgebra& g = ref<LieAlgebra>(o, "g", name);
        const Field f = e.field();
        return Lie2XMod{l, e, g,
                        LinearMap(f, e.dim(), columns(f, member(o, "d2", name), e.dim(), l.dim(), name + ".d2")),
                        LinearMap(f, g.dim(), columns(f, member(o, "d1", name), g.dim(), e.dim(), name + ".d1")),
                        tri(f, member(o, "on_l", name), g.dim(), l.dim(), l.dim(), name + ".on_l"),
                        tri(f, member(o, "on_e", name), g.dim(), e.dim(), e.dim(), name + ".on_e"),
                        tri(f, member(o, "lift", name), e.dim(), e.dim(), l.dim(), name + ".lift")};
    }

    Entry simplicial(const std::string& name, const json& o)
    {
        if (o.contains("constant"))
            return constant_simplicial(ref<HopfAlgebra>(o, "constant", name),
                                       count(member(o, "truncation", name), name + ".truncation"));
        TruncatedSimplicialHopf t;
        const json& lv = array(member(o, "levels", name), name + ".levels");
        if (lv.empty()) throw BundleError(name + ".levels", "needs at least one level");
        for (std::size_t k = 0; k < lv.size(); ++k) t.levels.push_back(ref_at<HopfAlgebra>(lv[k], at_index(name + ".levels", k)));
        const json& fs = array(member(o, "faces", name), name + ".faces", lv.size());
        const json& ds = array(member(o, "degens", name), name + ".degens", lv.size());
        for (std::size_t k = 0; k < lv.size(); ++k) {
            const std::string fp = at_index(name + ".faces", k), dp = at_index(name + ".degens", k);
            array(fs[k], fp, k == 0 ? 0 : k + 1);
            array(ds[k], dp, k);
            t.faces.emplace_back();
            t.degens.emplace_back();
            for (std::size_t i = 0; i < fs[k].size(); ++i) t.faces[k].push_back(ref_at<HopfMorphism>(fs[k][i], at_index(fp, i)));
            for (std::size_t j = 0; j < ds[k].size(); ++j) t.degens[k].push_back(ref_at<HopfMorphism>(ds[k][j], at_index(dp, j)));
        }
        try {
            check_shape(t);
        } catch (const Error& e) {
            throw BundleError(name, e.what());
        }
        return t;
    }
};

// ---- emission --------------------------------------------------------------------

json field_json(Field f)
{
    json j;
    if (f.is_rational()) {
        j["kind"] = "Q";
    } else {
        j["kind"] = "Fp";
        j["p"] = f.characteristic();
    }
    return j;
}

json vec_json(const Vec& v)
{
    json j = json::array();
    for (const auto& t : v.terms()) j.push_back(json::array({t.index, t.coef.str()}));
    return j;
}

json columns_json(const LinearMap& m)
{
    json j = json::array();
    for (const auto& c : m.columns()) j.push_back(vec_json(c));
    return j;
}

json tri_json(std::size_t a, std::size_t b, const std::function<Vec(Index, Index)>& value)
{
    json j = json::array();
    for (Index i = 0; i < a; ++i) {
        json row = json::array();
        for (Index k = 0; k < b; ++k) row.push_back(vec_json(value(i, k)));
        j.push_back(std::move(row));
    }
    return j;
}

json table_json(const Table& t)
{
    json j = json::array();
    for (const auto& row : t) j.push_back(row);
    return j;
}

bool same_action(const ActionTensor& a, const ActionTensor& b)
{
    if (!a.acting().same_as(b.acting()) || !a.carrier().same_as(b.carrier())) return false;
    for (Index x = 0; x < a.acting().dim(); ++x)
        for (Index v = 0; v < a.carrier().dim(); ++v)
            if (!(a.act(x, v) == b.act(x, v))) return false;
    return true;
}

bool same_lie(const LieAlgebra& a, const LieAlgebra& b)
{
    return a.labels() == b.labels() && a.bracket() == b.bracket();
}

class Emitter {
public:
    explicit Emitter(const Bundle& b) : bundle_(b)
    {
        for (const auto& [name, e] : b.entries) {
            used_.insert(name);
            std::visit([&](const auto& v) { register_value(v, name); }, e);
        }
    }

    std::string run()
    {
        for (const auto& [name, e] : bundle_.entries) out_[name] = std::visit([&](const auto& v) { return value(v, name); }, e);
        std::ostringstream os;
        os << "{\n  \"schema\": \"" << kSchema << "\",\n  \"entries\": {";
        bool first = true;
        for (const auto& [name, j] : out_) {
            os << (first ? "\n" : ",\n") << "    " << json(name).dump() << ": ";
            write(os, j, 4);
            first = false;
        }
        os << (first ? "}" : "\n  }") << "\n}\n";
        return os.str();
    }

private:
    const Bundle& bundle_;
    std::set<std::string> used_;
    std::map<std::string, json> out_;
    std::vector<std::pair<HopfAlgebra, std::string>> hopfs_;
    std::vector<std::pair<FiniteGroup, std::string>> groups_;
    std::vector<std::pair<LieAlgebra, std::string>> lies_;
    std::vector<std::pair<ActionTensor, std::string>> actions_;
    std::vector<std::pair<HopfMorphism, std::string>> morphisms_;

    void register_value(const HopfAlgebra& h, const std::string& n) { hopfs_.emplace_back(h, n); }
    void register_value(const FiniteGroup& g, const std::string& n) { groups_.emplace_back(g, n); }
    void register_value(const LieAlgebra& g, const std::string& n) { lies_.emplace_back(g, n); }
    void register_value(const ActionTensor& a, const std::string& n) { actions_.emplace_back(a, n); }
    void register_value(const HopfMorphism& f, const std::string& n) { morphisms_.emplace_back(f, n); }
    template <class T>
    void register_value(const T&, const std::string&)
    {
    }

    std::string fresh(const std::string& hint)
    {
        std::string n = hint;
        for (int k = 2; used_.count(n); ++k) n = hint + "~" + std::to_string(k);
        used_.insert(n);
        return n;
    }

    template <class T, class Same>
    std::string ref(std::vector<std::pair<T, std::string>>& seen, const T& v, const std::string& hint, Same same)
    {
        for (const auto& [w, n] : seen)
            if (same(v, w)) return n;
        const std::string n = fresh(hint);
        seen.emplace_back(v, n);
        out_[n] = value(v, n);
        return n;
    }

    std::string ref(const HopfAlgebra& h, const std::string& hint)
    {
        return ref(hopfs_, h, hint, [](const HopfAlgebra& a, const HopfAlgebra& b) { return a.same_as(b); });
    }
    std::string ref(const FiniteGroup& g, const std::string& hint)
    {
        return ref(groups_, g, hint, [](const FiniteGroup& a, const FiniteGroup& b) { return a == b; });
    }
    std::string ref(const LieAlgebra& g, const std::string& hint) { return ref(lies_, g, hint, same_lie); }
    std::string ref(const ActionTensor& a, const std::string& hint) { return ref(actions_, a, hint, same_action); }
    std::string ref(const HopfMorphism& f, const std::string& hint)
    {
        return ref(morphisms_, f, hint, [](const HopfMorphism& a, const HopfMorphism& b) {
            return a.source().same_as(b.source()) && a.target().same_as(b.target()) && a.map() == b.map();
        });
    }

    json value(const FiniteGroup& g, const std::string&)
    {
        json j;
        j["type"] = "group";
        j["labels"] = g.labels();
        j["table"] = table_json(g.table());
        return j;
    }

    json value(const LieAlgebra& g, const std::string&)
    {
        json j;
        j["type"] = "lie";
        j["field"] = field_json(g.field());
        j["labels"] = g.labels();
        j["bracket"] = tri_json(g.dim(), g.dim(), [&](Index a, Index b) { return g.bracket().value(a, b); });
        return j;
    }

    json value(const HopfAlgebra& h, const std::string& name)
    {
        json j;
        if (const auto* f = h.factors()) {
            if (f->kind == HopfAlgebra::Factors::Kind::tensor) {
                j["type"] = "tensor";
                j["left"] = ref(*f->left, name + ".left");
                j["right"] = ref(*f->right, name + ".right");
            } else {
                j["type"] = "smash";
                j["action"] = ref(*f->action, name + ".action");
            }
            return j;
        }
        const Index d = h.dim();
        j["type"] = "hopf";
        j["field"] = field_json(h.field());
        j["labels"] = h.labels();
        j["cocommutative"] = h.cocommutative_flag();
        j["unit"] = vec_json(h.one());
        json eps = json::array();
        for (Index i = 0; i < d; ++i) eps.push_back(h.counit(i).str());
        j["counit"] = std::move(eps);
        j["mul"] = tri_json(d, d, [&](Index a, Index b) { return h.mul(a, b); });
        j["comul"] = columns_json(h.data().comul);
        j["antipode"] = columns_json(h.data().antipode);
        return j;
    }

    json value(const HopfMorphism& f, const std::string& name)
    {
        json j;
        j["type"] = "morphism";
        j["source"] = ref(f.source(), name + ".source");
        j["target"] = ref(f.target(), name + ".target");
        j["map"] = columns_json(f.map());
        return j;
    }

    json value(const ActionTensor& a, const std::string& name)
    {
        json j;
        j["type"] = "action";
        j["acting"] = ref(a.acting(), name + ".acting");
        j["carrier"] = ref(a.carrier(), name + ".carrier");
        j["coeffs"] = tri_json(a.acting().dim(), a.carrier().dim(), [&](Index x, Index v) { return a.act(x, v); });
        return j;
    }

    json value(const HopfXMod& x, const std::string& name)
    {
        json j;
        j["type"] = "xmod";
        j["I"] = ref(x.I, name + ".I");
        j["H"] = ref(x.H, name + ".H");
        j["boundary"] = ref(x.boundary, name + ".boundary");
        j["action"] = ref(x.action, name + ".action");
        return j;
    }

    json value(const Hopf2XMod& x, const std::string& name)
    {
        json j;
        j["type"] = "2xmod";
        j["K"] = ref(x.K, name + ".K");
        j["I"] = ref(x.I, name + ".I");
        j["H"] = ref(x.H, name + ".H");
        j["d2"] = ref(x.d2, name + ".d2");
        j["d1"] = ref(x.d1, name + ".d1");
        j["on_I"] = ref(x.on_I, name + ".on_I");
        j["on_K"] = ref(x.on_K, name + ".on_K");
        j["lift"] = tri_json(x.I.dim(), x.I.dim(), [&](Index a, Index b) { return x.lift.value(a, b); });
        return j;
    }

    json value(const TruncatedSimplicialHopf& t, const std::string& name)
    {
        json j;
        j["type"] = "simplicial";
        json levels = json::array(), faces = json::array(), degens = json::array();
        for (std::size_t k = 0; k < t.levels.size(); ++k) levels.push_back(ref(t.levels[k], name + ".H" + std::to_string(k)));
        for (std::size_t k = 0; k < t.levels.size(); ++k) {
            json fk = json::array(), dk = json::array();
            for (std::size_t i = 0; i < t.faces[k].size(); ++i)
                fk.push_back(ref(t.faces[k][i], name + ".d" + std::to_string(k) + "_" + std::to_string(i)));
            for (std::size_t i = 0; i < t.degens[k].size(); ++i)
                dk.push_back(ref(t.degens[k][i], name + ".s" + std::to_string(k) + "_" + std::to_string(i)));
            faces.push_back(std::move(fk));
            degens.push_back(std::move(dk));
        }
        j["levels"] = std::move(levels);
        j["faces"] = std::move(faces);
        j["degens"] = std::move(degens);
        return j;
    }

    json value(const Group2XMod& x, const std::string& name)
    {
        json j;
        j["type"] = "group_2xmod";
        j["L"] = ref(x.L, name + ".L");
        j["E"] = ref(x.E, name + ".E");
        j["G"] = ref(x.G, name + ".G");
        j["d2"] = x.d2;
        j["d1"] = x.d1;
        j["on_L"] = table_json(x.on_L.perm);
        j["on_E"] = table_json(x.on_E.perm);
        j["lift"] = table_json(x.lift);
        return j;
    }

    json value(const Lie2XMod& x, const std::string& name)
    {
        json j;
        j["type"] = "lie_2xmod";
        j["l"] = ref(x.l, name + ".l");
        j["e"] = ref(x.e, name + ".e");
        j["g"] = ref(x.g, name + ".g");
        j["d2"] = columns_json(x.d2);
        j["d1"] = columns_json(x.d1);
        auto t = [](const Trilinear& m) {
            return tri_json(m.dim_a(), m.dim_b(), [&](Index a, Index b) { return m.value(a, b); });
        };
        j["on_l"] = t(x.on_l);
        j["on_e"] = t(x.on_e);
        j["lift"] = t(x.lift);
        return j;
    }

    static std::size_t depth(const json& j)
    {
        if (j.is_object()) return flat_object(j) ? 1 : 99;
        if (!j.is_array()) return 0;
        std::size_t d = 0;
        for (const auto& c : j) d = std::max(d, depth(c));
        return d + 1;
    }

    static bool flat_object(const json& j)
    {
        for (const auto& [k, v] : j.items())
            if (v.is_structured()) return false;
        return j.size() <= 3;
    }

    // Objects one key per line unless tiny; arrays inline when shallow or short.
    static void write(std::ostream& os, const json& j, int indent)
    {
        const std::string pad(indent, ' '), inner(indent + 2, ' ');
        if (j.is_object() && !flat_object(j)) {
            os << "{";
            bool first = true;
            for (const auto& [k, v] : j.items()) {
                os << (first ? "\n" : ",\n") << inner << json(k).dump() << ": ";
                write(os, v, indent + 2);
                first = false;
            }
            os << (first ? "}" : "\n" + pad + "}");
            return;
        }
        if (j.is_array() && !j.empty()) {
            const std::size_t d = depth(j);
            if (d > 2) {
                const std::string flat = d == 3 ? j.dump() : std::string();
                if (d > 3 || flat.size() > 100) {
                    os << "[";
                    for (std::size_t i = 0; i < j.size(); ++i) {
                        os << (i ? ",\n" : "\n") << inner;
                        write(os, j[i], indent + 2);
                    }
                    os << "\n" << pad << "]";
                    return;
                }
            }
        }
        os << j.dump();
    }
};

}  // namespace

BundleError::BundleError(std::string where, const std::string& what)
    : Error(where.empty() ? what : where + ": " + what), where_(std::move(where))
{
}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what), line_(line), column_(column)
{
}

std::string_view entry_type(const Entry& e)
{
    static constexpr std::string_view names[] = {"group", "lie",        "hopf",        "morphism",  "action",
                                                 "xmod",  "2xmod",      "simplicial", "group_2xmod", "lie_2xmod"};
    return names[e.index()];
}

const Entry& Bundle::at(const std::string& name) const
{
    auto it = entries.find(name);
    if (it == entries.end()) throw UnresolvedReference(name, "no entry named \"" + name + "\"");
    return it->second;
}

std::set<std::string> Bundle::reachable(const std::string& name) const
{
    std::set<std::string> seen;
    std::vector<std::string> todo{name};
    while (!todo.empty()) {
        const std::string n = todo.back();
        todo.pop_back();
        auto it = deps.find(n);
        if (it == deps.end()) continue;
        for (const auto& d : it->second)
            if (d != name && seen.insert(d).second) todo.push_back(d);
    }
    return seen;
}

Bundle parse_bundle_text(std::string_view text, LoadOptions opts)
{
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        std::size_t line = 0, col = 0;
        line_col(text, e.byte, line, col);
        std::string msg = e.what();
        if (auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
        throw ParseError(line, col, msg);
    }
    if (!root.is_object()) throw BundleError("", "a bundle is a JSON object");
    auto schema = root.find("schema");
    if (schema == root.end() || !schema->is_string() || schema->get<std::string>() != kSchema)
        throw BundleError("schema", "expected \"schema\": \"" + std::string(kSchema) + "\"");
    auto entries = root.find("entries");
    if (entries == root.end() || !entries->is_object()) throw BundleError("entries", "expected an object of entries");
    return Parser(*entries, opts).run();
}

Bundle parse_bundle(const std::filesystem::path& path, LoadOptions opts)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw BundleError(path.string(), "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_bundle_text(ss.str(), opts);
}

std::string emit_bundle(const Bundle& b) { return Emitter(b).run(); }

}  // namespace hopf2x
