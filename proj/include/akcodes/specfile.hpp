#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "akcodes/code.hpp"
#include "akcodes/common.hpp"

namespace akcodes {

// On-disk description of a code: a line-oriented "key = value" file.
// Keys: k, n, S, T, generator (repeatable), name, expected_d, and the
// optional note and quasi. '#' starts a comment; blank lines are ignored;
// S and T take a comma list of indices or the word "empty". Generator
// polynomials use the skew polynomial grammar; degrees >= 2n are reduced
// mod x^n - 1 on load. quasi (default 1) sets the closure step: 1 spans the
// generators under multiplication by x (a Theta_S-cyclic code), 2 under
// multiplication by x^2 (a 2-quasi-cyclic code, the input shape of the
// subring construction).
struct CodeSpec {
    std::string name;
    std::uint32_t k = 1;
    std::size_t n = 0;
    VarSet S = 0;
    VarSet T = 0;
    std::vector<std::string> generators;  // canonical polynomial text
    std::optional<unsigned> expected_d;
    std::string note;
    unsigned quasi = 1;

    bool operator==(const CodeSpec&) const = default;
};

// Parses one code spec from text. Requires k >= 1, n >= 1, S and T subsets of
// {1..k}, and at least one generator.
CodeSpec parse_codespec(const std::string& text);
CodeSpec load_codespec(const std::string& path);

std::string format_codespec(const CodeSpec& spec);
void save_codespec(const CodeSpec& spec, const std::string& path);

// The code generated by the spec's polynomials in A_k[x; Theta_S]/(x^n - 1).
Code build_code(const CodeSpec& spec);

// A table file holds any number of code specs separated by lines containing
// only "---". An empty file yields an empty list.
std::vector<CodeSpec> parse_table(const std::string& text);
std::vector<CodeSpec> load_table(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace akcodes
