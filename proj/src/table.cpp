#include "bistab/table.hpp"

#include <sstream>

#include "bistab/report_json.hpp"

namespace bistab {

std::vector<TableRow> biharmonic_table(int ambient_max) {
    if (ambient_max < 4)
        throw std::invalid_argument("biharmonic_table: requires ambient_max >= 4");
    std::vector<TableRow> rows;
    for (int ambient = 2; ambient <= ambient_max; ++ambient) {
        const int m = ambient - 1;
        for (int p = 1; 2 * p < m; ++p) {
            const HypersurfaceModel model = BiharmonicTorus(p, m - p);
            rows.push_back({ambient, model, compute_index(model).index});
        }
        const HypersurfaceModel sphere = BiharmonicSmallSphere(m);
        rows.push_back({ambient, sphere, compute_index(sphere).index});
    }
    return rows;
}

std::string render_table(const std::vector<TableRow>& rows, TableFormat format) {
    std::ostringstream out;
    switch (format) {
        case TableFormat::Markdown:
            out << "| Ambient sphere | Biharmonic hypersurface | Index |\n";
            out << "|---|---|---|\n";
            for (const TableRow& row : rows)
                out << "| S^" << row.ambient_dim << " | " << family_label(row.model) << " | "
                    << to_string(row.index) << " |\n";
            break;
        case TableFormat::Csv:
            out << "ambient_dim,family,index\n";
            for (const TableRow& row : rows)
                out << row.ambient_dim << "," << family_label(row.model) << ","
                    << to_string(row.index) << "\n";
            break;
        case TableFormat::Json: {
            nlohmann::json list = nlohmann::json::array();
            for (const TableRow& row : rows) list.push_back(row);
            out << list.dump(2) << "\n";
            break;
        }
    }
    return out.str();
}

}  // namespace bistab
