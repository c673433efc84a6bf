#include "mpinv/serialize.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>
#include <sstream>

namespace mpinv {

namespace {

void chomp(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

bool blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

/// Drops a trailing "# ..." comment; returns true if nothing is left.
bool strip_comment(std::string& line) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    return std::all_of(line.begin(), line.end(), [](unsigned char c) {
        return std::isspace(c);
    });
}

std::vector<long long> parse_integers(const std::string& line, int line_no,
                                      std::size_t expected) {
    std::istringstream in(line);
    std::vector<long long> values;
    std::string token;
    while (in >> token) {
        try {
            std::size_t used = 0;
            values.push_back(std::stoll(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw parse_error(line_no, "expected an integer, got '" + token + "'");
        }
    }
    if (values.size() != expected)
        throw parse_error(line_no, "expected " + std::to_string(expected) +
                                       " integers, got " + std::to_string(values.size()));
    return values;
}

}  // namespace

GraphReadResult read_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    int header_line = 0;
    long long n = 0, m = 0;
    bool have_header = false;
    std::vector<std::pair<int, int>> endpoints;
    std::vector<int> endpoint_lines;
    while (std::getline(in, line)) {
        ++line_no;
        chomp(line);
        if (strip_comment(line)) continue;
        if (!have_header) {
            const auto head = parse_integers(line, line_no, 2);
            n = head[0];
            m = head[1];
            header_line = line_no;
            if (n < 1) throw parse_error(line_no, "vertex count must be at least 1");
            if (m < 0) throw parse_error(line_no, "edge count must be nonnegative");
            have_header = true;
            continue;
        }
        const auto pair = parse_integers(line, line_no, 2);
        if (pair[0] < 1 || pair[1] < 1)
            throw parse_error(line_no, "vertex labels must be positive");
        endpoints.emplace_back(static_cast<int>(pair[0]), static_cast<int>(pair[1]));
        endpoint_lines.push_back(line_no);
    }
    if (!have_header) throw parse_error(line_no, "missing 'n m' header");
    if (static_cast<long long>(endpoints.size()) != m)
        throw parse_error(line_no, "expected " + std::to_string(m) + " edges, found " +
                                       std::to_string(endpoints.size()));

    GraphReadResult result;
    const bool in_range = std::all_of(endpoints.begin(), endpoints.end(), [n](auto e) {
        return e.first <= n && e.second <= n;
    });
    if (!in_range) {
        std::map<int, int> remap;
        for (auto [u, v] : endpoints) {
            remap.emplace(u, 0);
            remap.emplace(v, 0);
        }
        if (static_cast<long long>(remap.size()) > n)
            throw parse_error(header_line, "more distinct labels than declared vertices");
        int next = 0;
        for (auto& [label, assigned] : remap) {
            assigned = ++next;
            result.relabeling.emplace_back(label, assigned);
        }
        for (auto& [u, v] : endpoints) {
            u = remap[u];
            v = remap[v];
        }
    }
    result.graph = build_graph(static_cast<int>(n), endpoints);
    return result;
}

std::string write_graph(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

std::string matrix_to_csv(const RationalMatrix& m) {
    std::ostringstream out;
    out << "# rows=" << index_kind_name(m.row_kind()) << " cols="
        << index_kind_name(m.col_kind()) << " shape=" << m.rows() << 'x' << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out << ',';
            out << m(r, c);
        }
        out << '\n';
    }
    return out.str();
}

namespace {

/// Pulls "key=value" out of the CSV header comment.
std::string header_field(const std::string& header, const std::string& key) {
    const std::string needle = key + "=";
    const auto at = header.find(needle);
    if (at == std::string::npos)
        throw parse_error(1, "matrix header is missing '" + key + "='");
    auto end = header.find(' ', at);
    if (end == std::string::npos) end = header.size();
    return header.substr(at + needle.size(), end - at - needle.size());
}

}  // namespace

RationalMatrix matrix_from_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line)) throw parse_error(1, "empty input");
    chomp(line);
    if (line.rfind("# ", 0) != 0)
        throw parse_error(1, "expected '# rows=... cols=... shape=...' header");
    const auto row_kind = index_kind_from_name(header_field(line, "rows"));
    const auto col_kind = index_kind_from_name(header_field(line, "cols"));
    if (!row_kind || !col_kind) throw parse_error(1, "unknown index kind in header");
    const std::string shape = header_field(line, "shape");
    const auto split = shape.find('x');
    if (split == std::string::npos) throw parse_error(1, "malformed shape '" + shape + "'");
    std::size_t rows = 0, cols = 0;
    try {
        rows = std::stoul(shape.substr(0, split));
        cols = std::stoul(shape.substr(split + 1));
    } catch (const std::exception&) {
        throw parse_error(1, "malformed shape '" + shape + "'");
    }

    RationalMatrix m(rows, cols, *row_kind, *col_kind);
    for (std::size_t r = 0; r < rows; ++r) {
        const int line_no = static_cast<int>(r) + 2;
        if (!std::getline(in, line)) throw parse_error(line_no, "missing matrix row");
        chomp(line);
        std::size_t c = 0;
        std::size_t start = 0;
        while (start <= line.size() && cols > 0) {
            auto comma = line.find(',', start);
            if (comma == std::string::npos) comma = line.size();
            const std::string token = line.substr(start, comma - start);
            if (c >= cols) throw parse_error(line_no, "too many entries in row");
            try {
                m(r, c) = parse_rational(token);
            } catch (const std::invalid_argument& err) {
                throw parse_error(line_no, err.what());
            }
            ++c;
            start = comma + 1;
            if (comma == line.size()) break;
        }
        if (c != cols)
            throw parse_error(line_no, "expected " + std::to_string(cols) +
                                           " entries, got " + std::to_string(c));
    }
    if (std::getline(in, line) && !blank_or_comment(line))
        throw parse_error(static_cast<int>(rows) + 2, "trailing content after matrix");
    return m;
}

std::string matrix_to_json(const RationalMatrix& m) {
    nlohmann::ordered_json out;
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    out["row_kind"] = index_kind_name(m.row_kind());
    out["col_kind"] = index_kind_name(m.col_kind());
    auto entries = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto row = nlohmann::ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
        entries.push_back(std::move(row));
    }
    out["entries"] = std::move(entries);
    return out.dump();
}

RationalMatrix matrix_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw parse_error(0, std::string("invalid JSON: ") + err.what());
    }
    try {
        const auto rows = doc.at("rows").get<std::size_t>();
        const auto cols = doc.at("cols").get<std::size_t>();
        const auto row_kind = index_kind_from_name(doc.at("row_kind").get<std::string>());
        const auto col_kind = index_kind_from_name(doc.at("col_kind").get<std::string>());
        if (!row_kind || !col_kind) throw parse_error(0, "unknown index kind");
        const auto& entries = doc.at("entries");
        if (entries.size() != rows) throw parse_error(0, "row count mismatch");
        RationalMatrix m(rows, cols, *row_kind, *col_kind);
        for (std::size_t r = 0; r < rows; ++r) {
            const auto& row = entries.at(r);
            if (row.size() != cols) throw parse_error(0, "column count mismatch");
            for (std::size_t c = 0; c < cols; ++c)
                m(r, c) = parse_rational(row.at(c).get<std::string>());
        }
        return m;
    } catch (const nlohmann::json::exception& err) {
        throw parse_error(0, std::string("malformed matrix JSON: ") + err.what());
    } catch (const std::invalid_argument& err) {
        throw parse_error(0, err.what());
    }
}

}  // namespace mpinv
