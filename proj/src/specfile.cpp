#include "akcodes/specfile.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "akcodes/skew_poly.hpp"

namespace akcodes {

namespace {

std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

unsigned long parse_number(const std::string& text, const std::string& key) {
    const std::string t = strip(text);
    if (t.empty()) throw Error("empty value for " + key);
    unsigned long v = 0;
    for (char ch : t) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw Error("value of " + key + " must be a number, got \"" + t + "\"");
        v = v * 10 + static_cast<unsigned long>(ch - '0');
        if (v > 1000000) throw Error("value of " + key + " is too large");
    }
    return v;
}

struct RawSpec {
    CodeSpec spec;
    bool have_k = false, have_n = false;
};

void apply_line(RawSpec& raw, const std::string& key, const std::string& value) {
    if (key == "k") {
        raw.spec.k = static_cast<std::uint32_t>(parse_number(value, "k"));
        raw.have_k = true;
    } else if (key == "n") {
        raw.spec.n = parse_number(value, "n");
        raw.have_n = true;
    } else if (key == "S") {
        raw.spec.S = parse_varset(value);
    } else if (key == "T") {
        raw.spec.T = parse_varset(value);
    } else if (key == "generator") {
        raw.spec.generators.push_back(strip(value));
    } else if (key == "name") {
        raw.spec.name = strip(value);
    } else if (key == "expected_d") {
        raw.spec.expected_d = static_cast<unsigned>(parse_number(value, "expected_d"));
    } else if (key == "note") {
        raw.spec.note = strip(value);
    } else if (key == "quasi") {
        raw.spec.quasi = static_cast<unsigned>(parse_number(value, "quasi"));
    } else {
        throw Error("unknown key \"" + key + "\" in code spec");
    }
}

CodeSpec finish(RawSpec raw) {
    CodeSpec& spec = raw.spec;
    if (!raw.have_k) throw Error("code spec is missing k");
    if (!raw.have_n) throw Error("code spec is missing n");
    if (spec.k < 1) throw Error("k must be at least 1");
    require_valid_k(spec.k);
    if (spec.n < 1) throw Error("n must be at least 1");
    if (spec.S >= (VarSet{1} << spec.k))
        throw Error("S = " + format_varset(spec.S) + " exceeds k = " + std::to_string(spec.k));
    if (spec.T >= (VarSet{1} << spec.k))
        throw Error("T = " + format_varset(spec.T) + " exceeds k = " + std::to_string(spec.k));
    if (spec.generators.empty()) throw Error("code spec has no generator");
    if (spec.quasi != 1 && spec.quasi != 2)
        throw Error("quasi must be 1 or 2, got " + std::to_string(spec.quasi));
    // Canonicalize generator text; reduce degrees >= 2n so the stored form
    // respects the degree bound.
    for (auto& g : spec.generators) {
        SkewPoly f = parse_poly(spec.k, spec.S, g);
        if (f.degree() >= static_cast<long>(2 * spec.n))
            f = word_to_poly(spec.S, mod_xn_minus_1(f, spec.n));
        g = format_poly(f);
    }
    return spec;
}

}  // namespace

CodeSpec parse_codespec(const std::string& text) {
    RawSpec raw;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = strip(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw Error("expected \"key = value\", got \"" + line + "\"");
        apply_line(raw, strip(line.substr(0, eq)), line.substr(eq + 1));
    }
    return finish(std::move(raw));
}

CodeSpec load_codespec(const std::string& path) { return parse_codespec(read_text_file(path)); }

std::string format_codespec(const CodeSpec& spec) {
    std::ostringstream os;
    if (!spec.name.empty()) os << "name = " << spec.name << "\n";
    os << "k = " << spec.k << "\n";
    os << "n = " << spec.n << "\n";
    os << "S = " << format_varset_plain(spec.S) << "\n";
    os << "T = " << format_varset_plain(spec.T) << "\n";
    for (const auto& g : spec.generators) os << "generator = " << g << "\n";
    if (spec.expected_d) os << "expected_d = " << *spec.expected_d << "\n";
    if (!spec.note.empty()) os << "note = " << spec.note << "\n";
    if (spec.quasi != 1) os << "quasi = " << spec.quasi << "\n";
    return os.str();
}

void save_codespec(const CodeSpec& spec, const std::string& path) {
    write_text_file(path, format_codespec(spec));
}

Code build_code(const CodeSpec& spec) {
    std::vector<SkewPoly> gens;
    gens.reserve(spec.generators.size());
    for (const auto& g : spec.generators) gens.push_back(parse_poly(spec.k, spec.S, g));
    return Code::span(spec.k, spec.n, span_generators(gens, spec.n, spec.quasi));
}

std::vector<CodeSpec> parse_table(const std::string& text) {
    std::vector<CodeSpec> out;
    std::istringstream in(text);
    std::string line, block;
    bool block_has_content = false;
    auto flush = [&] {
        if (block_has_content) out.push_back(parse_codespec(block));
        block.clear();
        block_has_content = false;
    };
    while (std::getline(in, line)) {
        if (strip(line) == "---") {
            flush();
            continue;
        }
        std::string check = line;
        const auto hash = check.find('#');
        if (hash != std::string::npos) check.erase(hash);
        if (!strip(check).empty()) block_has_content = true;
        block += line;
        block += '\n';
    }
    flush();
    return out;
}

std::vector<CodeSpec> load_table(const std::string& path) {
    return parse_table(read_text_file(path));
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open file for writing: " + path);
    out << content;
    if (!out) throw Error("failed writing file: " + path);
}

}  // namespace akcodes
