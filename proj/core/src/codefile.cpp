#include "fdrc/codefile.hpp"

#include <cstdlib>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace fdrc {

namespace {

constexpr const char* kMarker = "ferrers-rank-code";

std::size_t parse_size(const std::string& s, const char* what) {
    if (s.empty()) throw ParseError(std::string(what) + " is missing");
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s.c_str(), &end, 10);
    if (end == nullptr || *end != '\0')
        throw ParseError(std::string(what) + " must be an unsigned integer, got '" + s + "'");
    return static_cast<std::size_t>(v);
}

nlohmann::json matrix_rows(const Mat& a) {
    auto rows = nlohmann::json::array();
    for (std::size_t r = 0; r < a.rows(); ++r) {
        auto row = nlohmann::json::array();
        for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(a(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::string render_code(const FerrersCode& code) {
    std::ostringstream out;
    out << kMarker << "\n";
    out << code.diagram.render_compact() << "\n";
    out << "field: " << code.field->descriptor() << "\n";
    out << "delta: " << code.delta << "\n";
    out << "k: " << code.basis.size() << "\n";
    out << "provenance: " << code.provenance << "\n";
    for (const Mat& m : code.basis) out << "matrix:\n" << render_matrix(m);
    return out.str();
}

FerrersCode parse_code(const std::string& text) {
    std::vector<std::string> lines;
    {
        std::istringstream is(text);
        std::string line;
        while (std::getline(is, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            lines.push_back(std::move(line));
        }
    }
    std::size_t pos = 0;
    auto next = [&]() -> const std::string& {
        while (pos < lines.size() && lines[pos].empty()) ++pos;
        if (pos == lines.size()) throw ParseError("truncated code file");
        return lines[pos++];
    };
    auto keyed = [&](const std::string& key) {
        const std::string& l = next();
        if (l.rfind(key + ":", 0) != 0)
            throw ParseError("expected a '" + key + ":' line, got '" + l + "'");
        std::string v = l.substr(key.size() + 1);
        if (!v.empty() && v.front() == ' ') v.erase(0, 1);
        return v;
    };

    if (next() != kMarker) throw ParseError("missing ferrers-rank-code marker");
    FerrersDiagram diagram = FerrersDiagram::parse("gamma: " + keyed("gamma"));
    FieldPtr field = Field::from_descriptor(keyed("field"));
    const std::size_t delta = parse_size(keyed("delta"), "delta");
    if (delta == 0) throw ParseError("delta must be positive");
    const std::size_t k = parse_size(keyed("k"), "k");
    std::string provenance = keyed("provenance");

    std::vector<Mat> basis;
    basis.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        if (next() != "matrix:") throw ParseError("expected a 'matrix:' line");
        std::string block;
        for (std::size_t r = 0; r <= diagram.rows(); ++r) block += next() + "\n";
        Mat m = parse_matrix(block);
        if (m.rows() != diagram.rows() || m.cols() != diagram.cols())
            throw ParseError("matrix block does not match the diagram shape");
        if (!m.field()->same(*field))
            throw ParseError("matrix field differs from the header field");
        basis.push_back(std::move(m));
    }
    while (pos < lines.size() && lines[pos].empty()) ++pos;
    if (pos != lines.size())
        throw ParseError("unexpected content after the last matrix: '" + lines[pos] + "'");
    return FerrersCode{std::move(diagram), std::move(field), delta, std::move(basis),
                       std::move(provenance)};
}

std::string code_json(const FerrersCode& code) {
    nlohmann::json j;
    j["format"] = kMarker;
    j["gamma"] = code.diagram.gamma();
    j["m"] = code.diagram.rows();
    j["n"] = code.diagram.cols();
    j["q"] = code.field->size();
    j["field"] = code.field->descriptor();
    j["delta"] = code.delta;
    j["k"] = code.basis.size();
    j["provenance"] = code.provenance;
    auto basis = nlohmann::json::array();
    for (const Mat& m : code.basis) basis.push_back(matrix_rows(m));
    j["basis"] = std::move(basis);
    return j.dump(2) + "\n";
}

FerrersCode code_from_json(const std::string& text) {
    try {
        const nlohmann::json j = nlohmann::json::parse(text);
        if (j.value("format", "") != kMarker)
            throw ParseError("missing ferrers-rank-code format marker");
        FerrersDiagram diagram(j.at("gamma").get<std::vector<std::size_t>>());
        FieldPtr field = Field::from_descriptor(j.at("field").get<std::string>());
        if (j.contains("q") && j.at("q").get<std::uint64_t>() != field->size())
            throw ParseError("q does not match the field descriptor");
        const std::size_t delta = j.at("delta").get<std::size_t>();
        if (delta == 0) throw ParseError("delta must be positive");
        std::vector<Mat> basis;
        for (const auto& rows : j.at("basis")) {
            std::vector<std::vector<felt>> entries;
            for (const auto& row : rows) entries.push_back(row.get<std::vector<felt>>());
            if (entries.size() != diagram.rows())
                throw ParseError("matrix does not match the diagram shape");
            for (const auto& row : entries) {
                if (row.size() != diagram.cols())
                    throw ParseError("matrix does not match the diagram shape");
                for (felt v : row)
                    if (v >= field->size()) throw ParseError("matrix entry out of field range");
            }
            basis.push_back(Mat::from_rows(field, entries));
        }
        if (j.contains("k") && j.at("k").get<std::size_t>() != basis.size())
            throw ParseError("k does not match the number of basis matrices");
        return FerrersCode{std::move(diagram), std::move(field), delta, std::move(basis),
                           j.value("provenance", "")};
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad code json: ") + e.what());
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

std::string diagram_json(const FerrersDiagram& f) {
    nlohmann::json j;
    j["m"] = f.rows();
    j["n"] = f.cols();
    j["gamma"] = f.gamma();
    j["rho"] = f.rho();
    j["theta"] = f.thetas();
    j["dots"] = f.total_dots();
    return j.dump(2) + "\n";
}

}  // namespace fdrc
