#include "satmat/serialize.hpp"

#include <sstream>

namespace satmat {

namespace {

std::vector<int> one_based(const std::vector<int>& v) {
    std::vector<int> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] + 1;
    return out;
}

std::string join(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(v[i]);
    }
    return out.empty() ? "-" : out;
}

const char* yn(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string format_class_label(const ClassLabel& label) {
    std::ostringstream out;
    out << "isPermutation: " << yn(label.is_permutation) << '\n'
        << "onceSeparable: " << yn(label.once_separable) << '\n'
        << "trivial: " << yn(label.trivial) << '\n'
        << "outerClass: " << to_string(label.outer_class) << '\n'
        << "outerClassUpToReflection: "
        << to_string(label.outer_class_up_to_reflection) << '\n'
        << "maxAntiIdentityHeight: " << label.max_anti_identity_height;
    return out.str();
}

nlohmann::json to_json(const ClassLabel& label) {
    return {
        {"isPermutation", label.is_permutation},
        {"onceSeparable", label.once_separable},
        {"trivial", label.trivial},
        {"outerClass", to_string(label.outer_class)},
        {"outerClassUpToReflection", to_string(label.outer_class_up_to_reflection)},
        {"maxAntiIdentityHeight", label.max_anti_identity_height},
    };
}

std::string format_witness_report(const WitnessReport& report) {
    std::ostringstream out;
    out << "avoidsPattern: " << yn(report.avoids) << '\n'
        << "expandableRows: " << join(one_based(report.expandable_rows)) << '\n'
        << "expandableCols: " << join(one_based(report.expandable_cols)) << '\n'
        << "isVertical: " << yn(report.vertical) << '\n'
        << "isHorizontal: " << yn(report.horizontal) << '\n'
        << "isFull: " << yn(report.full) << '\n'
        << "isExplicit: " << yn(report.explicit_witness) << '\n'
        << "patternDims: " << report.pattern_rows << 'x' << report.pattern_cols
        << '\n'
        << "witnessDims: " << report.matrix_rows << 'x' << report.matrix_cols;
    return out.str();
}

nlohmann::json to_json(const WitnessReport& report) {
    return {
        {"avoidsPattern", report.avoids},
        {"expandableRows", one_based(report.expandable_rows)},
        {"expandableCols", one_based(report.expandable_cols)},
        {"isVertical", report.vertical},
        {"isHorizontal", report.horizontal},
        {"isFull", report.full},
        {"isExplicit", report.explicit_witness},
        {"patternDims", {report.pattern_rows, report.pattern_cols}},
        {"witnessDims", {report.matrix_rows, report.matrix_cols}},
    };
}

std::string format_occurrence(const Occurrence& occ) {
    return "rows: " + join(one_based(occ.row_map)) +
           "\ncols: " + join(one_based(occ.col_map));
}

nlohmann::json to_json(const Occurrence& occ) {
    return {
        {"rowMap", one_based(occ.row_map)},
        {"colMap", one_based(occ.col_map)},
    };
}

std::string format_class_record(const ClassRecord& record) {
    std::ostringstream out;
    out << "size: " << record.size << '\n'
        << "onceSeparable: " << yn(record.once_separable) << '\n'
        << "outerClassUpToReflection: "
        << to_string(record.outer_class_up_to_reflection) << '\n'
        << "maxAntiIdentityHeight: " << record.max_anti_identity_height << '\n'
        << "almostQ1: " << yn(record.almost_q1) << '\n'
        << "wpAvoidsPattern: " << yn(record.wp_avoids_pattern) << '\n'
        << "certificate: " << record.certificate;
    if (!record.witness_name.empty()) out << '\n' << "witnessName: " << record.witness_name;
    out << '\n' << "canonicalForm:\n" << format_matrix(record.canonical);
    return out.str();
}

nlohmann::json to_json(const ClassRecord& record) {
    nlohmann::json j{
        {"canonicalForm", format_matrix(record.canonical)},
        {"size", record.size},
        {"onceSeparable", record.once_separable},
        {"outerClassUpToReflection",
         to_string(record.outer_class_up_to_reflection)},
        {"maxAntiIdentityHeight", record.max_anti_identity_height},
        {"almostQ1", record.almost_q1},
        {"wpAvoidsPattern", record.wp_avoids_pattern},
        {"certificate", record.certificate},
    };
    if (!record.witness_name.empty()) j["witnessName"] = record.witness_name;
    return j;
}

}  // namespace satmat
