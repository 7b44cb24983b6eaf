#include "trip/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace trip {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size() + 1, 0);
    for (int v : img_) {
        if (v < 1 || v > static_cast<int>(img_.size()) || seen[v])
            throw ParseError("not a permutation");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int d) {
    std::vector<int> v(d);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::from_cycles(std::string_view text, int degree) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 1);
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)) || (!s.empty() && s.back() != ' ')) s += c;
    while (!s.empty() && s.back() == ' ') s.pop_back();
    if (s == "e" || s == "id" || s == "()") return Permutation(img);
    size_t i = 0;
    std::vector<char> used(degree + 1, 0);
    while (i < s.size()) {
        if (s[i] == ' ') { ++i; continue; }
        if (s[i] != '(') throw ParseError("bad cycle notation: '" + std::string(text) + "'");
        size_t close = s.find(')', i);
        if (close == std::string::npos) throw ParseError("unclosed cycle: '" + std::string(text) + "'");
        std::string body = s.substr(i + 1, close - i - 1);
        std::vector<int> cyc;
        bool spaced = body.find_first_of(" ,") != std::string::npos;
        if (spaced) {
            std::string tok;
            for (char c : body + " ") {
                if (std::isdigit(static_cast<unsigned char>(c))) tok += c;
                else if (c == ' ' || c == ',') {
                    if (!tok.empty()) cyc.push_back(std::stoi(tok));
                    tok.clear();
                } else throw ParseError("bad cycle element in '" + std::string(text) + "'");
            }
        } else {
            for (char c : body) {
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw ParseError("bad cycle element in '" + std::string(text) + "'");
                cyc.push_back(c - '0');
            }
        }
        for (int v : cyc) {
            if (v < 1 || v > degree) throw ParseError("cycle entry out of range in '" + std::string(text) + "'");
            if (used[v]) throw ParseError("repeated entry in '" + std::string(text) + "'");
            used[v] = 1;
        }
        // Cycles are applied left to right, matching the composition order.
        std::vector<int> c(img);
        for (size_t k = 0; k < cyc.size(); ++k) c[cyc[k] - 1] = cyc[(k + 1) % cyc.size()];
        img = c;
        i = close + 1;
    }
    return Permutation(img);
}

Permutation Permutation::from_one_line(std::string_view text) {
    std::vector<int> v;
    std::string tok;
    for (char c : std::string(text) + ",") {
        if (std::isdigit(static_cast<unsigned char>(c))) tok += c;
        else if (c == ',') {
            if (tok.empty()) throw ParseError("bad one-line permutation: '" + std::string(text) + "'");
            v.push_back(std::stoi(tok));
            tok.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c)) && c != '[' && c != ']')
            throw ParseError("bad one-line permutation: '" + std::string(text) + "'");
    }
    return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text, int degree) {
    std::string s(text);
    int depth = 0;
    bool comma = false;
    for (char c : s) {
        if (c == '(') ++depth;
        else if (c == ')') --depth;
        else if (c == ',' && depth == 0) comma = true;
    }
    if (comma || s.find('[') != std::string::npos) {
        Permutation p = from_one_line(s);
        if (p.degree() != degree) throw ParseError("permutation degree mismatch: '" + s + "'");
        return p;
    }
    return from_cycles(s, degree);
}

Permutation Permutation::inverse() const {
    std::vector<int> r(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) r[img_[i] - 1] = static_cast<int>(i) + 1;
    return Permutation(std::move(r));
}

Permutation Permutation::operator*(const Permutation& o) const {
    if (degree() != o.degree()) throw std::invalid_argument("permutation degree mismatch");
    std::vector<int> r(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) r[i] = o.img_[img_[i] - 1];
    return Permutation(std::move(r));
}

bool Permutation::is_identity() const {
    for (size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != static_cast<int>(i) + 1) return false;
    return true;
}

std::string Permutation::cycles() const {
    std::string out;
    std::vector<char> seen(img_.size() + 1, 0);
    for (int start = 1; start <= degree(); ++start) {
        if (seen[start] || img_[start - 1] == start) continue;
        out += '(';
        int j = start;
        bool first = true;
        while (!seen[j]) {
            seen[j] = 1;
            if (!first) out += ' ';
            out += std::to_string(j);
            first = false;
            j = img_[j - 1];
        }
        out += ')';
    }
    return out.empty() ? "e" : out;
}

std::string Permutation::one_line() const {
    std::string out;
    for (size_t i = 0; i < img_.size(); ++i) out += (i ? "," : "") + std::to_string(img_[i]);
    return out;
}

IntMatrix perm_to_matrix(const Permutation& p) {
    IntMatrix m(p.degree());
    for (int i = 1; i <= p.degree(); ++i) m(i - 1, p(i) - 1) = 1;
    return m;
}

std::vector<Permutation> all_permutations(int d) {
    std::vector<int> v(d);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do out.emplace_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace trip
