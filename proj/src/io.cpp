#include "prmkit/io.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace prmkit {

namespace {

Matrix build(int p, int e, long rows, long cols, const std::vector<long>& vals) {
    if (p < 2 || e < 1 || rows < 0 || cols < 0) throw std::invalid_argument("bad matrix header");
    if (vals.size() != static_cast<std::size_t>(rows * cols)) throw std::invalid_argument("matrix entry count mismatch");
    auto f = Field::build(p, e);
    Matrix m(f, static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (vals[i] < 0 || static_cast<std::uint64_t>(vals[i]) >= f->order())
            throw std::invalid_argument("matrix entry outside the field: " + std::to_string(vals[i]));
        m.at(i / static_cast<std::size_t>(cols), i % static_cast<std::size_t>(cols)) = static_cast<Elem>(vals[i]);
    }
    return m;
}

Matrix read_delimited(std::string_view text, char sep) {
    std::string s(text);
    if (sep != ' ')
        for (char& c : s)
            if (c == sep) c = ' ';
    std::istringstream in(s);
    long p = 0, e = 0, rows = 0, cols = 0;
    if (!(in >> p >> e >> rows >> cols)) throw std::invalid_argument("missing matrix header");
    std::vector<long> vals;
    long v = 0;
    while (in >> v) vals.push_back(v);
    if (!in.eof()) throw std::invalid_argument("non-numeric matrix entry");
    return build(static_cast<int>(p), static_cast<int>(e), rows, cols, vals);
}

}  // namespace

MatrixFormat matrix_format_from_string(std::string_view s) {
    if (s == "txt") return MatrixFormat::Txt;
    if (s == "csv") return MatrixFormat::Csv;
    if (s == "json") return MatrixFormat::Json;
    throw std::invalid_argument("unknown format: " + std::string(s));
}

std::string write_matrix(const Matrix& m, MatrixFormat fmt) {
    const auto& f = *m.field();
    if (fmt == MatrixFormat::Json) {
        nlohmann::json j;
        j["schema"] = "prmkit/1";
        j["p"] = f.characteristic();
        j["e"] = f.degree();
        j["rows"] = m.rows();
        j["cols"] = m.cols();
        auto data = nlohmann::json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) {
            auto row = nlohmann::json::array();
            for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(i, c));
            data.push_back(row);
        }
        j["data"] = data;
        return j.dump() + "\n";
    }
    const char sep = fmt == MatrixFormat::Csv ? ',' : ' ';
    std::ostringstream out;
    out << f.characteristic() << sep << f.degree() << sep << m.rows() << sep << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out << sep;
            out << m.at(i, c);
        }
        out << '\n';
    }
    return out.str();
}

Matrix read_matrix(std::string_view text, MatrixFormat fmt) {
    if (fmt != MatrixFormat::Json) return read_delimited(text, fmt == MatrixFormat::Csv ? ',' : ' ');
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument(std::string("bad JSON: ") + ex.what());
    }
    if (j.value("schema", "") != "prmkit/1") throw std::invalid_argument("unsupported schema");
    try {
        const long rows = j.at("rows").get<long>();
        const long cols = j.at("cols").get<long>();
        std::vector<long> vals;
        const auto& data = j.at("data");
        if (!data.is_array() || static_cast<long>(data.size()) != rows) throw std::invalid_argument("row count mismatch");
        for (const auto& row : data) {
            if (!row.is_array() || static_cast<long>(row.size()) != cols)
                throw std::invalid_argument("row length mismatch");
            for (const auto& v : row) vals.push_back(v.get<long>());
        }
        return build(j.at("p").get<int>(), j.at("e").get<int>(), rows, cols, vals);
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument(std::string("bad matrix JSON: ") + ex.what());
    }
}

Matrix read_matrix(std::string_view text) {
    const auto pos = text.find_first_not_of(" \t\r\n");
    if (pos != std::string_view::npos && text[pos] == '{') return read_matrix(text, MatrixFormat::Json);
    const auto eol = text.find('\n');
    const auto first = text.substr(0, eol);
    return read_matrix(text, first.find(',') != std::string_view::npos ? MatrixFormat::Csv : MatrixFormat::Txt);
}

}  // namespace prmkit
