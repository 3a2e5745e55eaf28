#include "insdel/codefile.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace insdel {
namespace {

std::string strip_comment(const std::string& line) {
    const size_t pos = line.find('#');
    std::string s = pos == std::string::npos ? line : line.substr(0, pos);
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(int lineno, const std::string& msg) {
    throw input_error("code file line " + std::to_string(lineno) + ": " + msg);
}

}  // namespace

std::vector<int> parse_int_csv(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t used = 0;
            const int v = std::stoi(tok, &used);
            while (used < tok.size() && std::isspace((unsigned char)tok[used])) ++used;
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw input_error("bad integer list entry '" + tok + "'");
        }
    }
    if (out.empty()) throw input_error("empty integer list");
    return out;
}

std::string serialize_code(const LinearCode& c) {
    std::ostringstream os;
    os << c.field.header() << "\n";
    os << "n " << c.n << "\n";
    os << "k " << c.k << "\n";
    if (!c.label.empty()) os << "label " << c.label << "\n";
    for (int i = 0; i < c.k; ++i) {
        os << "row";
        for (int j = 0; j < c.n; ++j) os << ' ' << c.gen.at(i, j);
        os << "\n";
    }
    return os.str();
}

LinearCode parse_code(std::istream& in) {
    std::optional<Field> field;
    int n = -1, k = -1;
    std::string label;
    std::vector<Word> rows;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = strip_comment(raw);
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "field") {
            int p = 0, m = 0;
            std::vector<int> poly;
            std::string kv;
            while (ls >> kv) {
                const size_t eq = kv.find('=');
                if (eq == std::string::npos) fail(lineno, "expected key=value, got '" + kv + "'");
                const std::string name = kv.substr(0, eq), val = kv.substr(eq + 1);
                try {
                    if (name == "p")
                        p = std::stoi(val);
                    else if (name == "m")
                        m = std::stoi(val);
                    else if (name == "poly")
                        poly = parse_int_csv(val);
                    else
                        fail(lineno, "unknown field attribute '" + name + "'");
                } catch (const input_error&) {
                    throw;
                } catch (const std::exception&) {
                    fail(lineno, "bad value in '" + kv + "'");
                }
            }
            if (p == 0 || m == 0) fail(lineno, "field line needs p= and m=");
            std::reverse(poly.begin(), poly.end());  // file stores degree-descending
            try {
                field.emplace(p, m, poly);
            } catch (const input_error& e) {
                fail(lineno, e.what());
            }
        } else if (key == "n" || key == "k") {
            int v;
            if (!(ls >> v)) fail(lineno, "expected an integer after '" + key + "'");
            (key == "n" ? n : k) = v;
        } else if (key == "label") {
            std::getline(ls, label);
            const auto first = label.find_first_not_of(" \t");
            label = first == std::string::npos ? "" : label.substr(first);
        } else if (key == "row") {
            if (!field) fail(lineno, "row before field line");
            if (n < 0) fail(lineno, "row before n line");
            Word row;
            int v;
            while (ls >> v) row.push_back(v);
            if ((int)row.size() != n) fail(lineno, "row has wrong length");
            for (int e : row)
                if (e < 0 || e >= field->q()) fail(lineno, "entry out of field range");
            rows.push_back(std::move(row));
        } else {
            fail(lineno, "unknown directive '" + key + "'");
        }
    }
    if (!field) throw input_error("code file: missing field line");
    if (n < 1 || k < 1) throw input_error("code file: missing n or k line");
    if ((int)rows.size() != k)
        throw input_error("code file: expected " + std::to_string(k) + " rows, found " +
                          std::to_string(rows.size()));
    try {
        return LinearCode(*field, Matrix::from_rows(*field, rows), label);
    } catch (const input_error& e) {
        throw input_error(std::string("code file: ") + e.what());
    }
}

LinearCode load_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    return parse_code(in);
}

void save_code_file(const LinearCode& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write '" + path + "'");
    out << serialize_code(c);
}

std::string serialize_permutation(const std::vector<int>& perm0) {
    std::ostringstream os;
    os << "perm";
    for (int v : perm0) os << ' ' << v + 1;
    return os.str();
}

std::vector<int> parse_permutation_line(const std::string& line) {
    std::istringstream ls(strip_comment(line));
    std::string key;
    ls >> key;
    if (key != "perm") throw input_error("permutation line must start with 'perm'");
    std::vector<int> perm;
    int v;
    while (ls >> v) perm.push_back(v - 1);
    if (perm.empty()) throw input_error("empty permutation");
    return perm;
}

std::vector<int> load_permutation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    std::string line;
    while (std::getline(in, line))
        if (!strip_comment(line).empty()) return parse_permutation_line(line);
    throw input_error("no permutation line in '" + path + "'");
}

}  // namespace insdel
