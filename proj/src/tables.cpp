#include "mtlab/tables.hpp"

#include <array>
#include <utility>

namespace mtlab {

namespace {

using Tuple = std::pair<std::int64_t, std::int64_t>;

constexpr std::array<std::int64_t, 11> table1_w{-10, -7, -5, -4, -1, 1, 4, 5, 7, 8, 10};
constexpr std::array<Tuple, 7> table2_ab{{{1, 3}, {2, 4}, {1, 4}, {2, 5}, {1, 5}, {3, 6}, {2, 6}}};
constexpr std::array<Tuple, 2> table3_Nb{{{6, 1}, {6, 2}}};
constexpr std::array<Tuple, 4> table4_Nb{{{3, 2}, {3, 3}, {3, 4}, {7, 1}}};

std::string label(FamilyRecord const & r)
{
    std::string s = to_string(r.family);
    for (auto const & [k, v] : r.params)
        s += " " + k + "=" + to_string(v);
    return s;
}

}  // namespace

TableResult compute_table(int id, AnalysisOptions const & opts)
{
    TableResult t;
    t.id = id;
    std::vector<FamilyRecord> recs;
    switch (id) {
        case 1:
            t.header = {"w", "d", "h_K"};
            for (auto w : table1_w)
                recs.push_back(main1_analyze(from_i64(w), opts));
            break;
        case 2:
            t.header = {"a", "b", "delta", "h", "n"};
            for (auto [a, b] : table2_ab)
                recs.push_back(main2_analyze(a, b, opts));
            break;
        case 3:
            t.header = {"N", "b", "delta", "h", "n"};
            for (auto [N, b] : table3_Nb)
                recs.push_back(main3_analyze(N, b, opts));
            break;
        case 4:
            t.header = {"N", "b", "delta", "h", "n"};
            for (auto [N, b] : table4_Nb)
                recs.push_back(main4_analyze(N, b, opts));
            break;
        default:
            throw usage_error("table id must be 1, 2, 3 or 4");
    }

    for (auto & r : recs) {
        if (!r.h) {
            t.skipped.push_back(label(r) + ": " + (r.h_note.empty() ? "class number not computed" : r.h_note));
            continue;
        }
        std::vector<std::string> row;
        for (auto const & [k, v] : r.params)
            row.push_back(to_string(v));
        row.push_back(to_string(r.delta));
        row.push_back(std::to_string(r.h->h));
        if (id != 1)
            row.push_back(std::to_string(r.n_claimed));
        t.rows.push_back(std::move(row));
        t.records.push_back(std::move(r));
    }
    return t;
}

std::string render_tsv(std::vector<std::string> const & header, std::vector<std::vector<std::string>> const & rows)
{
    std::string out;
    auto line = [&](std::vector<std::string> const & cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i)
                out += '\t';
            out += cells[i];
        }
        out += '\n';
    };
    line(header);
    for (auto const & r : rows)
        line(r);
    return out;
}

}  // namespace mtlab
