#pragma once

#include <string>
#include <vector>

#include "bistab/index.hpp"

namespace bistab {

struct TableRow {
    int ambient_dim = 0;  // the m+1 of S^{m+1}
    HypersurfaceModel model;
    BigInt index;

    bool operator==(const TableRow&) const = default;
};

// All proper biharmonic tori and small hyperspheres with ambient dimension
// <= ambient_max, ordered by ambient dimension, tori by increasing p first,
// then the small sphere. Indices come from compute_index. Requires
// ambient_max >= 4 (the smallest ambient sphere containing a torus).
std::vector<TableRow> biharmonic_table(int ambient_max);

enum class TableFormat { Markdown, Csv, Json };

std::string render_table(const std::vector<TableRow>& rows, TableFormat format);

}  // namespace bistab
