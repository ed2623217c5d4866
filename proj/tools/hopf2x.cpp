#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hopf2x/cli.hpp"
#include "hopf2x/kernels.hpp"

using namespace hopf2x;

namespace {

constexpr int kUsage = 2;

std::size_t parse_cap(const std::string& s, const char* source)
{
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos == 0 || pos != s.size() || v == 0) throw UsageError(std::string(source) + " must be a positive integer");
    return static_cast<std::size_t>(v);
}

Field parse_field(const std::string& s)
{
    if (s == "Q") return Field::rationals();
    std::string digits = s.rfind("F", 0) == 0 ? s.substr(1) : s;
    std::size_t pos = 0;
    unsigned long p = 0;
    try {
        p = std::stoul(digits, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos == 0 || pos != digits.size()) throw UsageError("--field takes Q or Fp such as F2");
    return Field::prime(static_cast<std::uint32_t>(p));
}

int fail_with(const std::string& format, std::string_view kind, const std::string& message,
              const std::optional<std::pair<std::size_t, std::size_t>>& where = std::nullopt)
{
    if (format == "json") {
        nlohmann::ordered_json j;
        j["schema"] = "hopf2x/1";
        j["error"]["kind"] = kind;
        j["error"]["message"] = message;
        if (where) {
            j["error"]["line"] = where->first;
            j["error"]["column"] = where->second;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cerr << "error: " << kind << ": " << message << "\n";
    }
    return kUsage;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Verify and build Hopf crossed modules and simplicial Hopf algebras"};
    app.set_help_all_flag("--help-all");

    std::string command, bundle_path, format = "text", mode = "both", field = "Q", out_path;
    std::optional<std::string> name;
    std::optional<std::string> cap;
    int level = 1;
    std::size_t n = 2, k = 2;
    bool closed_forms = false, precrossed = false, no_validate = false, serial = false;

    std::vector<std::string> names(command_names().begin(), command_names().end());
    app.add_option("command", command, "Command to run")->required()->check(CLI::IsMember(names));
    app.add_option("--bundle", bundle_path, "Bundle file (JSON, schema hopf2x/1)");
    app.add_option("--name", name, "Entry to operate on; optional when the bundle has one candidate");
    app.add_option("--level", level, "Round-trip level")->check(CLI::IsMember({1, 2}));
    app.add_option("--mode", mode, "Moore complex mode")->check(CLI::IsMember({"kernel", "projection", "both"}));
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--cap", cap, "Kernel-mode dimension cap (overrides HOPF2X_CAP)");
    app.add_option("--n", n, "Simplicial level for peiffer")->check(CLI::Range(0, 16));
    app.add_option("--k", k, "Level for decompose");
    app.add_flag("--closed-forms", closed_forms, "peiffer: compare composite and expanded pairings");
    app.add_flag("--precrossed", precrossed, "check-xmod: drop the Peiffer condition");
    app.add_option("--field", field, "linearize: Q or Fp such as F2");
    app.add_option("--out", out_path, "Write the constructed bundle here instead of stdout");
    app.add_flag("--no-validate", no_validate, "Skip validators on load");
    app.add_flag("--serial", serial, "Use the serial reference kernels");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }

    try {
        Limits lim = limits();
        if (const char* env = std::getenv("HOPF2X_CAP")) lim.kernel = parse_cap(env, "HOPF2X_CAP");
        if (cap) lim.kernel = parse_cap(*cap, "--cap");
        set_limits(lim);
        if (serial) kernels::set_default_exec(kernels::Exec::serial);

        CommandOptions opts;
        opts.name = name;
        opts.level = level;
        opts.mode = mode == "kernel" ? MooreMode::kernel : mode == "projection" ? MooreMode::projection : MooreMode::both;
        opts.n = n;
        opts.k = k;
        opts.closed_forms = closed_forms;
        opts.precrossed = precrossed;
        opts.field = parse_field(field);

        Bundle bundle;
        if (!bundle_path.empty())
            bundle = parse_bundle(bundle_path, LoadOptions{!no_validate});
        else if (command != "peiffer" || closed_forms)
            throw UsageError("--bundle is required");

        CommandResult res = run_command(command, bundle, opts);
        const std::string report = format == "json" ? emit_json(res.report) : emit_text(res.report);

        if (res.built && !out_path.empty()) {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw UsageError("cannot write " + out_path);
            out << emit_bundle(*res.built);
            std::cout << report;
        } else if (res.built) {
            const std::string built = emit_bundle(*res.built);
            if (format == "json")
                std::cout << "{\n\"report\": " << report << ",\n\"bundle\": " << built << "}\n";
            else
                std::cout << report << "--- bundle ---\n" << built;
        } else {
            std::cout << report;
        }
        return exit_code(res.report);
    } catch (const ParseError& e) {
        return fail_with(format, "parse", e.what(), std::pair{e.line(), e.column()});
    } catch (const UnresolvedReference& e) {
        return fail_with(format, "unresolved-reference", e.what());
    } catch (const BundleError& e) {
        return fail_with(format, "bundle", e.what());
    } catch (const UsageError& e) {
        return fail_with(format, "usage", e.what());
    } catch (const DimensionCapError& e) {
        return fail_with(format, "dimension-cap", e.what());
    } catch (const PreconditionError& e) {
        return fail_with(format, "precondition", e.what());
    } catch (const Error& e) {
        return fail_with(format, "error", e.what());
    }
}
