#include "ppm/matrix_io.hpp"

#include <sstream>
#include <stdexcept>

namespace ppm {

namespace {

template <typename T>
std::string scalar_to_string(const T& v)
{
    return to_string(v);
}

template <typename T>
T scalar_from_string(const std::string& s);

template <>
Integer scalar_from_string<Integer>(const std::string& s)
{
    return parse_integer(s);
}

template <>
Rational scalar_from_string<Rational>(const std::string& s)
{
    return parse_rational(s);
}

template <typename T>
Json matrix_to_json(const ExactMatrix<T>& m)
{
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (const auto& v : m.row(i))
            row.push_back(scalar_to_string(v));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    if (m.index())
        j["index"] = to_json(*m.index());
    return j;
}

template <typename T>
ExactMatrix<T> matrix_from_json(const Json& j)
{
    auto rows = j.at("rows").get<std::size_t>();
    auto cols = j.at("cols").get<std::size_t>();
    const auto& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows)
        throw std::invalid_argument("matrix JSON: 'entries' must have 'rows' rows");
    ExactMatrix<T> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& row = entries[i];
        if (!row.is_array() || row.size() != cols)
            throw std::invalid_argument("matrix JSON: row " + std::to_string(i) + " has wrong length");
        for (std::size_t c = 0; c < cols; ++c) {
            if (!row[c].is_string())
                throw std::invalid_argument("matrix JSON: entries must be strings");
            m(i, c) = scalar_from_string<T>(row[c].get<std::string>());
        }
    }
    if (j.contains("index"))
        m.set_index(exponent_set_from_json(j.at("index")));
    return m;
}

template <typename T>
std::string matrix_to_csv(const ExactMatrix<T>& m)
{
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c)
                out += ',';
            out += scalar_to_string(m(i, c));
        }
        out += '\n';
    }
    return out;
}

template <typename T>
ExactMatrix<T> matrix_from_csv(const std::string& text)
{
    std::vector<std::vector<T>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        std::vector<T> row;
        std::size_t start = 0;
        for (;;) {
            auto comma = line.find(',', start);
            row.push_back(scalar_from_string<T>(line.substr(start, comma - start)));
            if (comma == std::string::npos)
                break;
            start = comma + 1;
        }
        rows.push_back(std::move(row));
    }
    return ExactMatrix<T>::from_rows(rows);
}

}  // namespace

Json to_json(const ExponentSet& set)
{
    Json j;
    j["n"] = set.n;
    j["d"] = set.d;
    j["order"] = to_string(set.order);
    Json members = Json::array();
    for (const auto& e : set.members)
        members.push_back(e.entries());
    j["members"] = std::move(members);
    return j;
}

ExponentSet exponent_set_from_json(const Json& j)
{
    ExponentSet set;
    set.n = j.at("n").get<unsigned>();
    set.d = j.at("d").get<unsigned>();
    set.order = parse_order(j.at("order").get<std::string>());
    for (const auto& m : j.at("members")) {
        Exponent e(m.get<std::vector<unsigned>>());
        if (e.size() != set.n || e.degree() != set.d)
            throw std::invalid_argument("exponent set JSON: member " + to_string(e) +
                                        " does not match n/d");
        set.members.push_back(std::move(e));
    }
    return set;
}

Json to_json(const IntMatrix& m) { return matrix_to_json(m); }
Json to_json(const RatMatrix& m) { return matrix_to_json(m); }
IntMatrix int_matrix_from_json(const Json& j) { return matrix_from_json<Integer>(j); }
RatMatrix rat_matrix_from_json(const Json& j) { return matrix_from_json<Rational>(j); }

std::string to_csv(const IntMatrix& m) { return matrix_to_csv(m); }
std::string to_csv(const RatMatrix& m) { return matrix_to_csv(m); }
IntMatrix int_matrix_from_csv(const std::string& text) { return matrix_from_csv<Integer>(text); }
RatMatrix rat_matrix_from_csv(const std::string& text) { return matrix_from_csv<Rational>(text); }

}  // namespace ppm
