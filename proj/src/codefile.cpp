#include "lincode/codefile.hpp"

#include <fstream>
#include <sstream>

#include "lincode/errors.hpp"

namespace lincode {

namespace {

std::vector<long long> tokenize(const std::string& text) {
    std::vector<long long> out;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream words(line);
        std::string word;
        while (words >> word) {
            std::size_t used = 0;
            long long v = 0;
            try {
                v = std::stoll(word, &used);
            } catch (const std::exception&) {
                throw ParseError("not an integer: '" + word + "'");
            }
            if (used != word.size()) throw ParseError("not an integer: '" + word + "'");
            out.push_back(v);
        }
    }
    return out;
}

class TokenReader {
public:
    explicit TokenReader(const std::string& text) : tokens_(tokenize(text)) {}

    long long next(const char* what) {
        if (pos_ >= tokens_.size())
            throw ParseError(std::string("unexpected end of input, expected ") + what);
        return tokens_[pos_++];
    }

    std::size_t next_size(const char* what) {
        long long v = next(what);
        if (v < 0) throw ParseError(std::string(what) + " must be nonnegative");
        return std::size_t(v);
    }

    Elem next_entry(int q) {
        long long v = next("matrix entry");
        if (v < 0 || v >= q) throw SymbolOutOfRange("entry " + std::to_string(v) +
                                                    " outside GF(" + std::to_string(q) + ")");
        return Elem(v);
    }

    void finish() const {
        if (pos_ != tokens_.size()) throw ParseError("trailing data after the matrix");
    }

private:
    std::vector<long long> tokens_;
    std::size_t pos_ = 0;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

GeneratorMatrix parse_code_file(const std::string& text) {
    TokenReader rd(text);
    long long q = rd.next("q");
    if (q < 2) throw ParseError("q must be at least 2");
    std::size_t n = rd.next_size("n");
    std::size_t k = rd.next_size("k");
    if (n == 0 || k == 0) throw ParseError("n and k must be positive");
    Field f = make_field(int(q));
    std::vector<Vec> rows(k, Vec(n));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = rd.next_entry(int(q));
    rd.finish();
    return GeneratorMatrix(f, k, n, std::move(rows));
}

GeneratorMatrix load_code_file(const std::string& path) { return parse_code_file(slurp(path)); }

std::string format_code_file(const GeneratorMatrix& g) {
    std::ostringstream out;
    out << g.field().q() << ' ' << g.n() << ' ' << g.k() << '\n';
    for (std::size_t i = 0; i < g.k(); ++i) {
        for (std::size_t j = 0; j < g.n(); ++j) {
            if (j) out << ' ';
            out << int(g.rows()[i][j]);
        }
        out << '\n';
    }
    return out.str();
}

ExtensionFile parse_extension_file(const std::string& text) {
    TokenReader rd(text);
    long long q = rd.next("q");
    if (q < 2) throw ParseError("q must be at least 2");
    ExtensionFile ext;
    ext.q = int(q);
    ext.m = rd.next_size("m");
    ext.k = rd.next_size("k");
    if (ext.m == 0 || ext.k == 0) throw ParseError("m and k must be positive");
    ext.columns.assign(ext.m, Vec(ext.k));
    for (std::size_t i = 0; i < ext.k; ++i)
        for (std::size_t j = 0; j < ext.m; ++j) ext.columns[j][i] = rd.next_entry(ext.q);
    rd.finish();
    return ext;
}

ExtensionFile load_extension_file(const std::string& path) {
    return parse_extension_file(slurp(path));
}

std::string format_extension_file(int q, const ColumnBlock& columns) {
    std::ostringstream out;
    std::size_t m = columns.size();
    std::size_t k = m ? columns[0].size() : 0;
    out << q << ' ' << m << ' ' << k << '\n';
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (j) out << ' ';
            out << int(columns[j][i]);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace lincode
