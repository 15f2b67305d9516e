#pragma once

#include <string>
#include <vector>

#include "mtlab/families.hpp"

namespace mtlab {

/// Recomputed contents of one of the four reference tables. The parameter
/// tuples of each row are the only inputs; every other cell comes from the
/// family analyzers.
struct TableResult
{
    int id = 0;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<FamilyRecord> records;  // one per emitted row
    std::vector<std::string> skipped;   // rows left out, with the reason
};

TableResult compute_table(int id, AnalysisOptions const & opts);

/// Header line plus one line per row, tab separated, LF terminated.
std::string render_tsv(std::vector<std::string> const & header,
                       std::vector<std::vector<std::string>> const & rows);

}  // namespace mtlab
