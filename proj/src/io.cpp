#include "circarc/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace circarc {

namespace {

using nlohmann::json;

Rational rational_field(const json& j, const std::string& where) {
    if (!j.is_string() && !j.is_number_integer())
        throw ParseError(where + ": expected a rational string");
    std::string text = j.is_string() ? j.get<std::string>() : std::to_string(j.get<long>());
    try {
        return parse_rational(text);
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    }
}

}  // namespace

InputDocument parse_input_document(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("document root must be an object");

    if (doc.contains("arcs")) {
        const json& arr = doc["arcs"];
        if (!arr.is_array()) throw ParseError("arcs: expected an array");
        if (arr.empty()) throw EmptyInputError("arcs: empty collection");
        ArcCollection u;
        for (size_t i = 0; i < arr.size(); ++i) {
            const json& a = arr[i];
            std::string where = "arcs[" + std::to_string(i) + "]";
            if (!a.is_object() || !a.contains("start"))
                throw ParseError(where + ": expected {start, length|end}");
            Angle start(rational_field(a["start"], where + ".start"));
            if (a.contains("length")) {
                Rational len = rational_field(a["length"], where + ".length");
                if (len < 0) throw ParseError(where + ".length: negative");
                u.arcs.push_back(Arc::from_start_length(start, len));
            } else if (a.contains("end")) {
                Angle end(rational_field(a["end"], where + ".end"));
                u.arcs.push_back(Arc::from_endpoints(start, end));
            } else {
                throw ParseError(where + ": needs length or end");
            }
        }
        return InputDocument{std::move(u)};
    }

    if (doc.contains("points")) {
        const json& arr = doc["points"];
        if (!arr.is_array()) throw ParseError("points: expected an array");
        if (arr.empty()) throw EmptyInputError("points: empty list");
        PointsInput p;
        for (size_t i = 0; i < arr.size(); ++i)
            p.points.emplace_back(rational_field(arr[i], "points[" + std::to_string(i) + "]"));
        if (!doc.contains("radius")) throw ParseError("points document needs a radius");
        p.radius = rational_field(doc["radius"], "radius");
        if (p.radius < 0) throw ParseError("radius: negative");
        if (doc.contains("complex")) {
            std::string kind = doc["complex"].get<std::string>();
            if (kind == "cech")
                p.kind = PointComplexKind::cech;
            else if (kind == "vr")
                p.kind = PointComplexKind::vr;
            else
                throw ParseError("complex: expected \"cech\" or \"vr\"");
        }
        return InputDocument{std::move(p)};
    }

    throw ParseError("document needs \"arcs\" or \"points\"");
}

InputDocument load_input_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_input_document(ss.str());
}

std::string emit_input_document(const InputDocument& doc) {
    json out;
    if (doc.is_arcs()) {
        const ArcCollection& u = std::get<ArcCollection>(doc.payload);
        out["arcs"] = json::array();
        for (const Arc& a : u.arcs)
            out["arcs"].push_back({{"start", rational_to_string(a.start.value())},
                                   {"length", rational_to_string(a.length)}});
    } else {
        const PointsInput& p = std::get<PointsInput>(doc.payload);
        out["points"] = json::array();
        for (const Angle& a : p.points) out["points"].push_back(rational_to_string(a.value()));
        out["radius"] = rational_to_string(p.radius);
        out["complex"] = p.kind == PointComplexKind::cech ? "cech" : "vr";
    }
    return out.dump();
}

ArcCollection document_arcs(const InputDocument& doc) {
    if (doc.is_arcs()) return std::get<ArcCollection>(doc.payload);
    const PointsInput& p = std::get<PointsInput>(doc.payload);
    Rational r = p.kind == PointComplexKind::vr ? p.radius / 2 : p.radius;
    return balls(p.points, r);
}

namespace {

json reduction_json(const ReductionResult& red, bool include_log) {
    json r;
    r["n"] = red.n_prime;
    r["k"] = red.k_prime;
    r["kept"] = red.kept;
    if (include_log) {
        json log = json::array();
        for (const Removal& rm : red.log)
            log.push_back({{"removed", rm.removed},
                           {"by", rm.dominator},
                           {"case", std::string(1, lemma_case_letter(rm.how))}});
        r["removals"] = std::move(log);
    }
    return r;
}

}  // namespace

std::string homotopy_report_json(int input_size, const HomotopyType& h,
                                 const ReductionResult& red, bool include_log) {
    json out;
    out["n"] = input_size;
    out["reduced"] = reduction_json(red, include_log);
    if (h.is_contractible) {
        out["homotopy"] = {{"type", "contractible"}};
    } else {
        out["homotopy"] = {{"type", "wedge"}, {"dim", h.dim}, {"count", h.count}};
    }
    return out.dump();
}

std::string reduction_report_json(int input_size, const ReductionResult& red, bool include_log) {
    json out;
    out["n"] = input_size;
    out["reduced"] = reduction_json(red, include_log);
    return out.dump();
}

std::string format_table_cell(const HomotopyType& h) { return h.str(); }

std::string homotopy_table(int n_max, int k_max, ComplexVariant variant) {
    if (n_max < 2) throw std::invalid_argument("homotopy_table: need n_max >= 2");
    if (k_max < 0) k_max = n_max - 2;
    std::string out = "n\\k";
    for (int k = 0; k <= k_max; ++k) out += "\t" + std::to_string(k);
    out += "\n";
    for (int n = 2; n <= n_max; ++n) {
        out += std::to_string(n);
        for (int k = 0; k <= k_max; ++k) {
            HomotopyType h = variant == ComplexVariant::nerve ? nerve_homotopy(n, k)
                                                              : clique_homotopy(n, k);
            out += "\t" + format_table_cell(h);
        }
        out += "\n";
    }
    return out;
}

}  // namespace circarc
