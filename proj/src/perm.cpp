#include "gkforge/perm.hpp"

#include <algorithm>
#include <sstream>

#include "gkforge/errors.hpp"

namespace gkforge {

Perm::Perm(int degree) : images_(static_cast<size_t>(degree)) {
    for (int i = 0; i < degree; ++i) images_[static_cast<size_t>(i)] = i;
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
    const int n = degree();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int x : images_) {
        if (x < 0 || x >= n || seen[static_cast<size_t>(x)])
            throw MalformedPermutation("image list is not a bijection on 0.." + std::to_string(n - 1));
        seen[static_cast<size_t>(x)] = 1;
    }
}

bool Perm::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (images_[static_cast<size_t>(i)] != i) return false;
    return true;
}

Perm Perm::operator*(const Perm& rhs) const {
    std::vector<int> out(images_.size());
    for (size_t i = 0; i < images_.size(); ++i)
        out[i] = rhs.images_[static_cast<size_t>(images_[i])];
    Perm p;
    p.images_ = std::move(out);
    return p;
}

Perm Perm::inverse() const {
    std::vector<int> out(images_.size());
    for (size_t i = 0; i < images_.size(); ++i)
        out[static_cast<size_t>(images_[i])] = static_cast<int>(i);
    Perm p;
    p.images_ = std::move(out);
    return p;
}

Perm Perm::conjugated_by(const Perm& g) const {
    return g.inverse() * (*this) * g;
}

i64 Perm::order() const {
    std::vector<char> seen(images_.size(), 0);
    i64 ord = 1;
    for (size_t i = 0; i < images_.size(); ++i) {
        if (seen[i]) continue;
        i64 len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = static_cast<size_t>(images_[j]);
            ++len;
        }
        ord = lcm_i64(ord, len);
    }
    return ord;
}

Perm commutator(const Perm& a, const Perm& b) {
    return a.inverse() * b.inverse() * a * b;
}

std::string Perm::cycle_string() const {
    std::vector<char> seen(images_.size(), 0);
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < images_.size(); ++i) {
        if (seen[i] || images_[i] == static_cast<int>(i)) {
            seen[i] = 1;
            continue;
        }
        any = true;
        os << '(';
        size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = 1;
            if (!first) os << ' ';
            os << (j + 1);
            first = false;
            j = static_cast<size_t>(images_[j]);
        }
        os << ')';
    }
    if (!any) return "()";
    return os.str();
}

Perm Perm::parse_cycles(const std::string& text, int degree) {
    std::vector<int> images(static_cast<size_t>(degree));
    for (int i = 0; i < degree; ++i) images[static_cast<size_t>(i)] = i;

    size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos; };
    skip_ws();
    bool any_cycle = false;
    while (pos < text.size()) {
        if (text[pos] != '(')
            throw ParseError("expected '(' in cycle text: " + text);
        ++pos;
        any_cycle = true;
        std::vector<int> cycle;
        skip_ws();
        while (pos < text.size() && text[pos] != ')') {
            size_t start = pos;
            while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
            if (pos == start)
                throw ParseError("expected point number in cycle text: " + text);
            int point = std::stoi(text.substr(start, pos - start));
            if (point < 1 || point > degree)
                throw ParseError("point " + std::to_string(point) + " out of range 1.." +
                                 std::to_string(degree));
            cycle.push_back(point - 1);
            skip_ws();
            if (pos < text.size() && text[pos] == ',') { ++pos; skip_ws(); }
        }
        if (pos >= text.size())
            throw ParseError("unterminated cycle in: " + text);
        ++pos; // ')'
        for (size_t k = 0; k < cycle.size(); ++k) {
            int from = cycle[k];
            int to = cycle[(k + 1) % cycle.size()];
            if (images[static_cast<size_t>(from)] != from)
                throw ParseError("point " + std::to_string(from + 1) + " repeated across cycles in: " + text);
            images[static_cast<size_t>(from)] = to;
        }
        skip_ws();
    }
    if (!any_cycle)
        throw ParseError("empty permutation text (write \"()\" for the identity)");
    return Perm(std::move(images));
}

} // namespace gkforge
