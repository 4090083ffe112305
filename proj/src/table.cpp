#include "akcodes/table.hpp"

#include <atomic>
#include <sstream>
#include <thread>

#include "akcodes/code.hpp"

namespace akcodes {

namespace {

CodeSpec row(std::string name, std::uint32_t k, std::size_t n, const char* S, const char* T,
             const char* gen, unsigned d, std::string note = "") {
    CodeSpec spec;
    spec.name = std::move(name);
    spec.k = k;
    spec.n = n;
    spec.S = parse_varset(S);
    spec.T = parse_varset(T);
    spec.generators.push_back(gen);
    spec.expected_d = d;
    spec.note = std::move(note);
    return spec;
}

}  // namespace

const std::vector<CodeSpec>& bundled_table() {
    static const std::vector<CodeSpec> rows = {
        row("n4", 2, 4, "1,2", "1", "x^2+1", 2),
        row("n6", 7, 6, "1,3,5,7", "1", "x^3+1", 2),
        row("n8", 2, 8, "1,2", "empty", "x^4+(v1+1)x^3+x^2+v1x+1", 4),
        row("n10", 3, 10, "1,2", "empty", "x^5+1", 2),
        row("n12", 3, 12, "1,3", "empty", "x^6+(v1+1)x^5+x^4+x^3+x^2+v1x+1", 4),
        row("n14", 4, 14, "1,2,3", "1", "x^7+x^6+x^5+x^4+x+1", 4),
        row("n16", 4, 16, "1,2,3", "empty", "x^8+(v1+1)x^5+x^4+v1x^3+1", 4,
            "generator taken literally as printed; form set corrected from 1 to empty (the "
            "code is self-dual exactly for the T within {2,3,4}, not for the listed T = 1)"),
        row("n18", 2, 18, "1,2", "empty", "x^9+x^7+v1x^6+(1+v1)x^5+(1+v1)x^4+v1x^3+x^2+1", 4,
            "form set corrected from 1 to empty (the code is self-dual exactly for T = empty "
            "and T = 2, not for the listed T = 1)"),
        row("n20", 6, 20, "1,2,6", "empty", "x^10+(v1+1)x^7+x^6+x^5+x^4+v1x^3+1", 4,
            "leading exponent typo-corrected to 10"),
        row("n22", 3, 22, "1,2", "empty",
            "x^11+x^10+v1x^9+v1x^8+v1x^7+(v1+1)x^6+(v1+1)x^5+v1x^4+v1x^3+v1x^2+x+1", 6,
            "form set corrected from 1 to empty (the code is self-dual exactly for the T "
            "within {2,3}, not for the listed T = 1)"),
        row("n24", 5, 24, "1,3,4,5", "empty",
            "x^12+x^11+v1x^10+x^9+(v1+1)x^7+v1x^5+x^3+(v1+1)x^2+x+1", 8),
        row("n26", 2, 26, "1,2", "1",
            "x^13+x^11+v1x^10+(1+v1)x^9+v1x^8+v1x^7+(1+v1)x^6+(1+v1)x^5+v1x^4+(1+v1)x^3+x^2+1",
            6),
    };
    return rows;
}

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string distance_text(const DistanceResult& r) {
    return r.d ? std::to_string(*r.d) : "infeasible";
}

RowResult check_row(const CodeSpec& spec) {
    RowResult res;
    res.name = spec.name.empty() ? "(unnamed)" : spec.name;
    res.n = spec.n;
    res.k = spec.k;
    res.S = spec.S;
    res.T = spec.T;
    res.table_d = spec.expected_d ? std::to_string(*spec.expected_d) : "-";
    res.notes = spec.note;
    try {
        const Code code = build_code(spec);
        res.skew_cyclic = is_theta_cyclic(code, spec.S);
        res.self_dual = is_self_dual(code, spec.T);
        const DistanceResult d_ak = min_distance_components(code);
        const DistanceResult d_gray = gray_min_distance(code);
        res.d_ak = distance_text(d_ak);
        res.d_gray = distance_text(d_gray);
        bool distance_ok = true;
        if (spec.expected_d) {
            const bool ak_feasible = d_ak.d.has_value();
            const bool gray_feasible = d_gray.d.has_value();
            if (ak_feasible || gray_feasible) {
                distance_ok = (ak_feasible && *d_ak.d == *spec.expected_d) ||
                              (gray_feasible && *d_gray.d == *spec.expected_d);
            }
        }
        res.match = res.skew_cyclic && res.self_dual && distance_ok;
    } catch (const Error& e) {
        res.d_ak = "-";
        res.d_gray = "-";
        res.error = e.what();
        res.match = false;
        if (!res.notes.empty()) res.notes += "; ";
        res.notes += "error: ";
        res.notes += e.what();
    }
    return res;
}

}  // namespace

std::string TableReport::tsv() const {
    std::ostringstream os;
    os << "name\tn\tk\tS\tT\tskew_cyclic\tself_dual\td_ak\td_gray\ttable_d\tmatch\tnotes\n";
    for (const auto& r : rows) {
        os << r.name << '\t' << r.n << '\t' << r.k << '\t' << format_varset_plain(r.S) << '\t'
           << format_varset_plain(r.T) << '\t' << yes_no(r.skew_cyclic) << '\t'
           << yes_no(r.self_dual) << '\t' << r.d_ak << '\t' << r.d_gray << '\t' << r.table_d
           << '\t' << yes_no(r.match) << '\t' << r.notes << '\n';
    }
    return os.str();
}

TableReport verify_table(const std::vector<CodeSpec>& rows, unsigned threads) {
    TableReport report;
    report.rows.resize(rows.size());
    if (threads == 0) {
        threads = std::thread::hardware_concurrency();
        if (threads == 0) threads = 1;
    }
    threads = std::min<unsigned>(threads, rows.empty() ? 1u : static_cast<unsigned>(rows.size()));

    if (threads <= 1 || rows.size() <= 1) {
        for (std::size_t i = 0; i < rows.size(); ++i) report.rows[i] = check_row(rows[i]);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= rows.size()) return;
                report.rows[i] = check_row(rows[i]);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    report.all_match = true;
    for (const auto& r : report.rows)
        if (!r.match) report.all_match = false;
    return report;
}

}  // namespace akcodes
