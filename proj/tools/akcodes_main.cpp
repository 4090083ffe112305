// Command line front end: build, check, and transform codes over
// F2[v1,...,vk] described by spec files, and verify the bundled table.
//
// Exit codes: 0 success (all checks matched), 1 a check failed or a requested
// computation was out of cap, 2 usage or input errors.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "akcodes/code.hpp"
#include "akcodes/construct.hpp"
#include "akcodes/gray.hpp"
#include "akcodes/perm.hpp"
#include "akcodes/ring.hpp"
#include "akcodes/skew_poly.hpp"
#include "akcodes/specfile.hpp"
#include "akcodes/table.hpp"

namespace {

using namespace akcodes;

std::string poly_text(VarSet S, const Word& w) { return format_poly(word_to_poly(S, w)); }

std::vector<std::string> basis_generators(const Code& code, VarSet S) {
    std::vector<std::string> out;
    for (const auto& w : code.f2_basis()) out.push_back(poly_text(S, w));
    return out;
}

// Prefer the supplied compact generators if they regenerate the code;
// otherwise fall back to an explicit F2-basis.
void set_generators(CodeSpec& spec, const Code& code, std::vector<std::string> compact) {
    spec.generators = std::move(compact);
    if (!(build_code(spec) == code)) spec.generators = basis_generators(code, spec.S);
}

void emit_spec(const CodeSpec& spec, const std::string& out_path) {
    const std::string text = format_codespec(spec);
    std::cout << text;
    if (!out_path.empty()) {
        write_text_file(out_path, text);
        std::cout << "# written to " << out_path << "\n";
    }
}

std::string dims_text(const Code& code) {
    std::string s;
    for (std::size_t b = 0; b < code.components().size(); ++b) {
        if (b) s += ",";
        s += std::to_string(code.components()[b].dim());
    }
    return s;
}

int cmd_build(const std::string& path) {
    const CodeSpec spec = load_codespec(path);
    const Code code = build_code(spec);
    if (!spec.name.empty()) std::cout << "name: " << spec.name << "\n";
    std::cout << "ring: A_" << spec.k << "[x], twist S = " << format_varset(spec.S)
              << (spec.quasi == 2 ? ", closure step 2 (2-quasi-cyclic)" : "") << "\n";
    std::cout << "length: " << spec.n << "\n";
    std::cout << "cardinality: " << code.cardinality() << "\n";
    std::cout << "component dimensions: " << dims_text(code) << "\n";
    std::cout << "skew-cyclic for S: " << (is_theta_cyclic(code, spec.S) ? "yes" : "no") << "\n";
    return 0;
}

int cmd_check(const std::string& path) {
    const CodeSpec spec = load_codespec(path);
    const Code code = build_code(spec);
    if (!spec.name.empty()) std::cout << "name: " << spec.name << "\n";
    std::cout << "cardinality: " << code.cardinality() << "\n";

    const CharacterizationReport rep = check_characterization_1(code, spec.S);
    std::cout << "Gray image fixed by Sigma_S: " << (rep.sigma_fixes_gray ? "yes" : "no") << "\n";
    std::cout << "conjugated Gray image " << rep.quasi_index
              << "-quasi-cyclic: " << (rep.conjugated_quasi_cyclic ? "yes" : "no") << "\n";
    std::cout << "closed under the twisted shift: " << (rep.theta_cyclic ? "yes" : "no") << "\n";
    std::cout << "characterization readings agree: " << (rep.agree() ? "yes" : "no") << "\n";
    if (!rep.note.empty()) std::cout << "note: " << rep.note << "\n";

    const bool sd = is_self_dual(code, spec.T);
    std::cout << "self-dual for T = " << format_varset(spec.T) << ": " << (sd ? "yes" : "no")
              << "\n";

    const DistanceResult d_ak = min_distance_components(code);
    const DistanceResult d_gray = gray_min_distance(code);
    std::cout << "minimum distance over A_k: " << (d_ak.d ? std::to_string(*d_ak.d) : d_ak.note)
              << "\n";
    std::cout << "Gray image minimum distance: "
              << (d_gray.d ? std::to_string(*d_gray.d) : d_gray.note) << "\n";

    bool distance_ok = true;
    if (spec.expected_d) {
        std::cout << "expected distance: " << *spec.expected_d << "\n";
        if (d_ak.d || d_gray.d)
            distance_ok = (d_ak.d && *d_ak.d == *spec.expected_d) ||
                          (d_gray.d && *d_gray.d == *spec.expected_d);
    }
    const bool match = rep.theta_cyclic && rep.agree() && sd && distance_ok;
    std::cout << "match: " << (match ? "yes" : "no") << "\n";
    return match ? 0 : 1;
}

int cmd_verify_table(const std::string& path, const std::string& out_path, unsigned threads) {
    const std::vector<CodeSpec> rows = path.empty() ? bundled_table() : load_table(path);
    const TableReport report = verify_table(rows, threads);
    const std::string tsv = report.tsv();
    std::cout << tsv;
    if (!out_path.empty()) write_text_file(out_path, tsv);
    return report.all_match ? 0 : 1;
}

int cmd_construct_even(std::uint32_t k, const std::string& S_text, std::size_t n,
                       const std::vector<std::string>& gens, const std::string& name,
                       const std::string& out_path) {
    const VarSet S = parse_varset(S_text);
    std::vector<BinaryCode> inputs;
    std::vector<Word> gen_words;
    for (const auto& g : gens) {
        const SkewPoly f = parse_poly(0, 0, g);
        inputs.push_back(binary_cyclic_code(n, f));
        gen_words.push_back(mod_xn_minus_1(f, n));
    }
    const Code code = construct_even(k, S, inputs);

    // Compact generator: the word whose coordinate j interpolates, across the
    // evaluation points, the j-th bits of the input generator words.
    Word combined(n, Elem::zero(k));
    for (std::size_t j = 0; j < n; ++j) {
        BitVec values(std::size_t{1} << k);
        for (std::size_t b = 0; b < inputs.size(); ++b)
            if (!gen_words[b][j].is_zero()) values.set(b, true);
        combined[j] = crt_inverse(k, values);
    }
    CodeSpec spec;
    spec.name = name;
    spec.k = k;
    spec.n = n;
    spec.S = S;
    set_generators(spec, code, {poly_text(S, combined)});
    std::cout << "# skew-cyclic code over A_" << k << ", length " << n << ", cardinality "
              << code.cardinality() << "\n";
    emit_spec(spec, out_path);
    return 0;
}

int cmd_construct_odd(std::uint32_t k, const std::string& S_text, std::size_t n,
                      const std::vector<std::string>& gens, const std::string& name,
                      const std::string& out_path) {
    const VarSet S = parse_varset(S_text);
    std::vector<BinaryCode> inputs;
    for (const auto& g : gens) inputs.push_back(binary_cyclic_code(2 * n, parse_poly(0, 0, g)));
    const Code code = construct_odd(k, S, inputs);
    CodeSpec spec;
    spec.name = name;
    spec.k = k;
    spec.n = n;
    spec.S = S;
    std::vector<std::string> compact;
    for (const auto& w : code.generators()) compact.push_back(poly_text(S, w));
    set_generators(spec, code, std::move(compact));
    std::cout << "# skew-cyclic code over A_" << k << ", length " << n << ", cardinality "
              << code.cardinality() << "\n";
    emit_spec(spec, out_path);
    return 0;
}

int cmd_construct_from_ap(const std::string& S_text, const std::string& mu_text,
                          const std::vector<std::string>& files, const std::string& name,
                          const std::string& out_path) {
    const VarSet S = parse_varset(S_text);
    std::vector<CodeSpec> slot_specs;
    std::vector<Code> inputs;
    for (const auto& f : files) {
        slot_specs.push_back(load_codespec(f));
        inputs.push_back(build_code(slot_specs.back()));
    }
    const std::size_t s = inputs.size();
    if (s < 2 || (s & (s - 1)) != 0)
        throw Error("expected a power-of-two number of input files (at least 2), got " +
                    std::to_string(s));
    std::uint32_t shift = 0;
    while ((std::size_t{1} << shift) < s) ++shift;
    const std::uint32_t p = inputs[0].k();
    const std::uint32_t k = p + shift;

    std::optional<IndexPerm> mu;
    if (!mu_text.empty()) {
        std::vector<std::size_t> img;
        std::size_t pos = 0;
        while (pos < mu_text.size()) {
            std::size_t next = mu_text.find(',', pos);
            if (next == std::string::npos) next = mu_text.size();
            img.push_back(std::stoul(mu_text.substr(pos, next - pos)));
            pos = next + 1;
        }
        if (img.size() != s)
            throw Error("mu must list images of all " + std::to_string(s) + " slots");
        mu = IndexPerm::from_images(img);
    }

    const Code code = construct_from_ap(S, k, inputs, mu);

    const VarSet S_low = S & ((VarSet{1} << p) - 1);
    std::vector<std::vector<SkewPoly>> per_slot;
    for (const auto& sp : slot_specs) {
        std::vector<SkewPoly> polys;
        for (const auto& g : sp.generators) polys.push_back(parse_poly(p, S_low, g));
        per_slot.push_back(std::move(polys));
    }
    std::vector<std::string> compact;
    for (const auto& g : lift_generators(k, S, per_slot)) compact.push_back(format_poly(g));

    CodeSpec spec;
    spec.name = name;
    spec.k = k;
    spec.n = code.n();
    spec.S = S;
    set_generators(spec, code, std::move(compact));
    std::cout << "# skew-cyclic code over A_" << k << " from " << s << " codes over A_" << p
              << ", slot pairing " << induced_mu(k, p, S).cycle_string() << ", cardinality "
              << code.cardinality() << "\n";
    emit_spec(spec, out_path);
    return 0;
}

int cmd_dual(const std::string& path, const std::string& T_text, const std::string& out_path) {
    const CodeSpec spec = load_codespec(path);
    const Code code = build_code(spec);
    const VarSet T = parse_varset(T_text);
    const Code d = dual(code, T);
    CodeSpec out;
    out.name = spec.name.empty() ? "dual" : spec.name + "-dual";
    out.k = spec.k;
    out.n = spec.n;
    out.S = spec.S;
    out.T = T;
    out.quasi = spec.quasi;  // the dual of a 2-quasi-cyclic code is 2-quasi-cyclic
    out.generators = basis_generators(d, spec.S);
    if (!(build_code(out) == d))
        throw Error("internal error: dual code is not regenerated by its emitted spec");
    std::cout << "# dual for T = " << format_varset(T) << ": cardinality " << d.cardinality()
              << ", self-dual: " << (code == d ? "yes" : "no") << "\n";
    emit_spec(out, out_path);
    return 0;
}

int cmd_distance(const std::string& path, const std::string& method) {
    const CodeSpec spec = load_codespec(path);
    const Code code = build_code(spec);
    DistanceResult r;
    std::string label;
    if (method == "components") {
        r = min_distance_components(code);
        label = "minimum distance over A_" + std::to_string(spec.k) + " (components)";
    } else if (method == "brute") {
        r = min_distance_brute(code);
        label = "minimum distance over A_" + std::to_string(spec.k) + " (enumeration)";
    } else if (method == "gray") {
        r = gray_min_distance(code);
        label = "Gray image minimum distance";
    } else {
        throw Error("unknown method \"" + method + "\" (components, brute, gray)");
    }
    if (!r.d) {
        std::cout << label << ": " << r.note << "\n";
        return 1;
    }
    std::cout << label << ": " << *r.d << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"codes over F2[v1,...,vk] with a twisted cyclic structure"};
    app.require_subcommand(1);

    std::string file, out_path, method = "components", S_text, T_text, mu_text, name;
    std::uint32_t k = 1;
    std::size_t n = 0;
    unsigned threads = 0;
    std::vector<std::string> gens, files;

    auto* b = app.add_subcommand("build", "load a code spec and print its shape");
    b->add_option("file", file, "code spec file")->required();

    auto* c = app.add_subcommand("check", "verify cyclicity, self-duality, and distance");
    c->add_option("file", file, "code spec file")->required();

    auto* vt = app.add_subcommand("verify-table", "check rows against their claims");
    vt->add_option("file", file, "table file (default: the bundled table)");
    vt->add_option("--out", out_path, "also write the TSV report to this file");
    vt->add_option("--threads", threads, "worker threads (0 = hardware)");

    auto* ct = app.add_subcommand("construct", "build a code from smaller inputs");
    ct->require_subcommand(1);
    auto* ce = ct->add_subcommand("even", "from 2^k binary cyclic codes of even length n");
    ce->add_option("--k", k, "number of variables")->required();
    ce->add_option("--S", S_text, "twist set, e.g. \"1,2\" or \"empty\"")->required();
    ce->add_option("--n", n, "length (even)")->required();
    ce->add_option("--g", gens, "binary generator polynomial (repeat 2^k times)")->required();
    ce->add_option("--name", name, "name for the emitted spec");
    ce->add_option("--out", out_path, "write the emitted spec to this file");
    auto* co = ct->add_subcommand("odd",
                                  "from 2^(k-1) binary cyclic codes of length 2n (n odd)");
    co->add_option("--k", k, "number of variables")->required();
    co->add_option("--S", S_text, "twist set (nonempty)")->required();
    co->add_option("--n", n, "length of the result (odd)")->required();
    co->add_option("--g", gens, "binary generator polynomial of length-2n input (repeat 2^(k-1) times)")
        ->required();
    co->add_option("--name", name, "name for the emitted spec");
    co->add_option("--out", out_path, "write the emitted spec to this file");
    auto* ca = ct->add_subcommand("from-ap", "from 2^(k-p) codes over the subring A_p");
    ca->add_option("--S", S_text, "twist set over A_k")->required();
    ca->add_option("--mu", mu_text, "slot pairing images, e.g. \"2,1\" (must match the induced pairing)");
    ca->add_option("files", files, "spec files of the slot codes (2-quasi-cyclic over A_p)")
        ->required();
    ca->add_option("--name", name, "name for the emitted spec");
    ca->add_option("--out", out_path, "write the emitted spec to this file");

    auto* du = app.add_subcommand("dual", "emit the dual code's spec");
    du->add_option("file", file, "code spec file")->required();
    du->add_option("--T", T_text, "form twist set, e.g. \"1\" or \"empty\"")->required();
    du->add_option("--out", out_path, "write the emitted spec to this file");

    auto* di = app.add_subcommand("distance", "compute the minimum distance");
    di->add_option("file", file, "code spec file")->required();
    di->add_option("--method", method, "components (default), brute, or gray")
        ->check(CLI::IsMember({"components", "brute", "gray"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
            e.get_name() == "CallForVersion")
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (*b) return cmd_build(file);
        if (*c) return cmd_check(file);
        if (*vt) return cmd_verify_table(file, out_path, threads);
        if (*ce) return cmd_construct_even(k, S_text, n, gens, name, out_path);
        if (*co) return cmd_construct_odd(k, S_text, n, gens, name, out_path);
        if (*ca) return cmd_construct_from_ap(S_text, mu_text, files, name, out_path);
        if (*du) return cmd_dual(file, T_text, out_path);
        if (*di) return cmd_distance(file, method);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
