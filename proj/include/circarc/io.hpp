// Input/output documents: arcs or points-with-radius in, classification
// reports out. Rationals travel as exact strings, so round-trips are lossless.
#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "circarc/homotopy.hpp"

namespace circarc {

class EmptyInputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class PointComplexKind { cech, vr };

struct PointsInput {
    std::vector<Angle> points;
    Rational radius;
    PointComplexKind kind = PointComplexKind::cech;
};

struct InputDocument {
    std::variant<ArcCollection, PointsInput> payload;

    bool is_arcs() const { return payload.index() == 0; }
};

// Throws ParseError (with position info) on malformed documents and
// EmptyInputError when the arc or point list is empty.
InputDocument parse_input_document(const std::string& json_text);
InputDocument load_input_document(const std::string& path);

std::string emit_input_document(const InputDocument& doc);

// The arc collection the document denotes; for point documents, the balls of
// the effective radius (full radius for the ambient construction, half for
// the pairwise-distance one).
ArcCollection document_arcs(const InputDocument& doc);

std::string homotopy_report_json(int input_size, const HomotopyType& h,
                                 const ReductionResult& red, bool include_log);
std::string reduction_report_json(int input_size, const ReductionResult& red, bool include_log);

std::string format_table_cell(const HomotopyType& h);

// Tab-separated homotopy-type table: rows n = 2..n_max, columns k = 0..k_max.
std::string homotopy_table(int n_max, int k_max, ComplexVariant variant);

}  // namespace circarc
