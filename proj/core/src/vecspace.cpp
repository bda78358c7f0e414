#include "lexikit/vecspace.hpp"

#include <algorithm>

namespace lexikit {

Basis Basis::modified(uint32_t xi, uint32_t eta) {
    if (xi == eta) throw Error("modified basis requires xi != eta");
    Basis b;
    b.modified_ = true;
    b.xi_ = xi;
    b.eta_ = eta;
    return b;
}

std::string Basis::to_string() const {
    if (!modified_) return "std";
    return "mod:" + std::to_string(xi_) + "," + std::to_string(eta_);
}

Basis Basis::parse(const std::string& text) {
    if (text == "std") return standard();
    if (text.rfind("mod:", 0) == 0) {
        const auto comma = text.find(',', 4);
        if (comma != std::string::npos) {
            size_t used_xi = 0;
            size_t used_eta = 0;
            const std::string xi_part = text.substr(4, comma - 4);
            const std::string eta_part = text.substr(comma + 1);
            const unsigned long xi = std::stoul(xi_part, &used_xi);
            const unsigned long eta = std::stoul(eta_part, &used_eta);
            if (used_xi == xi_part.size() && used_eta == eta_part.size() && !xi_part.empty() &&
                !eta_part.empty()) {
                return modified(static_cast<uint32_t>(xi), static_cast<uint32_t>(eta));
            }
        }
    }
    throw Error("bad basis '" + text + "' (expected std or mod:XI,ETA)");
}

Vector::Vector(std::vector<uint8_t> coords) : coords_(std::move(coords)) {
    while (!coords_.empty() && coords_.back() == 0) coords_.pop_back();
}

uint32_t Vector::weight() const {
    uint32_t w = 0;
    for (uint8_t c : coords_)
        if (c != 0) ++w;
    return w;
}

std::strong_ordering Vector::operator<=>(const Vector& other) const {
    if (coords_.size() != other.coords_.size()) return coords_.size() <=> other.coords_.size();
    for (size_t i = coords_.size(); i-- > 0;) {
        if (coords_[i] != other.coords_[i]) return coords_[i] <=> other.coords_[i];
    }
    return std::strong_ordering::equal;
}

uint32_t hamming_distance(const Vector& u, const Vector& v) {
    const size_t n = std::max(u.size(), v.size());
    uint32_t dist = 0;
    for (size_t i = 0; i < n; ++i)
        if (u.coord(i) != v.coord(i)) ++dist;
    return dist;
}

Vector add(const Vector& u, const Vector& v, PrimeModulus p) {
    const size_t n = std::max(u.size(), v.size());
    std::vector<uint8_t> coords(n);
    for (size_t i = 0; i < n; ++i) coords[i] = p.add(u.coord(i), v.coord(i));
    return Vector(std::move(coords));
}

Vector sub(const Vector& u, const Vector& v, PrimeModulus p) {
    const size_t n = std::max(u.size(), v.size());
    std::vector<uint8_t> coords(n);
    for (size_t i = 0; i < n; ++i) coords[i] = p.sub(u.coord(i), v.coord(i));
    return Vector(std::move(coords));
}

Vector scale(const Vector& v, uint8_t c, PrimeModulus p) {
    std::vector<uint8_t> coords(v.size());
    for (size_t i = 0; i < v.size(); ++i) coords[i] = p.mul(v.coord(i), c);
    return Vector(std::move(coords));
}

std::vector<uint8_t> to_basis_coords(const Vector& v, const Basis& b, PrimeModulus p) {
    std::vector<uint8_t> coords(v.coords());
    if (b.is_modified()) {
        const uint32_t xi = b.xi();
        const uint32_t eta = b.eta();
        const uint8_t at_eta = p.sub(v.coord(eta), v.coord(xi));
        if (eta >= coords.size() && at_eta != 0) coords.resize(eta + 1, 0);
        if (eta < coords.size()) coords[eta] = at_eta;
        while (!coords.empty() && coords.back() == 0) coords.pop_back();
    }
    return coords;
}

Vector from_basis_coords(std::span<const uint8_t> coords, const Basis& b, PrimeModulus p) {
    std::vector<uint8_t> std_coords(coords.begin(), coords.end());
    if (b.is_modified()) {
        const uint32_t xi = b.xi();
        const uint32_t eta = b.eta();
        const uint8_t c_xi = xi < std_coords.size() ? std_coords[xi] : 0;
        if (c_xi != 0) {
            if (eta >= std_coords.size()) std_coords.resize(eta + 1, 0);
            std_coords[eta] = p.add(std_coords[eta], c_xi);
        }
    }
    return Vector(std::move(std_coords));
}

std::strong_ordering compare(const Vector& u, const Vector& v, const Basis& b, PrimeModulus p) {
    if (!b.is_modified()) return u <=> v;
    const auto cu = to_basis_coords(u, b, p);
    const auto cv = to_basis_coords(v, b, p);
    if (cu.size() != cv.size()) return cu.size() <=> cv.size();
    for (size_t i = cu.size(); i-- > 0;) {
        if (cu[i] != cv[i]) return cu[i] <=> cv[i];
    }
    return std::strong_ordering::equal;
}

IndexSet support(const Vector& v, const Basis& b, PrimeModulus p) {
    const auto coords = to_basis_coords(v, b, p);
    IndexSet s;
    for (uint32_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0) s.push_back(i);
    return s;
}

IndexSet joint_support(std::span<const Vector> words) {
    std::vector<bool> seen;
    for (const Vector& w : words) {
        if (w.size() > seen.size()) seen.resize(w.size(), false);
        for (size_t i = 0; i < w.size(); ++i)
            if (w.coord(i) != 0) seen[i] = true;
    }
    IndexSet s;
    for (uint32_t i = 0; i < seen.size(); ++i)
        if (seen[i]) s.push_back(i);
    return s;
}

Vector restrict_to(const Vector& v, const IndexSet& s) {
    std::vector<uint8_t> coords(s.size());
    for (size_t j = 0; j < s.size(); ++j) coords[j] = v.coord(s[j]);
    return Vector(std::move(coords));
}

Vector rank_to_vector(uint64_t m, const Basis& b, PrimeModulus p, uint32_t max_index) {
    const auto digits = base_p_digits(m, p);
    if (!digits.empty() && digits.size() - 1 > max_index) {
        throw SearchBudgetExceeded("rank needs coordinate index " +
                                   std::to_string(digits.size() - 1) + " above the limit " +
                                   std::to_string(max_index));
    }
    return from_basis_coords(digits, b, p);
}

uint64_t vector_rank(const Vector& v, const Basis& b, PrimeModulus p) {
    return digits_to_value(to_basis_coords(v, b, p), p);
}

std::string to_digit_string(const Vector& v, size_t pad_len) {
    const size_t n = std::max(v.size(), pad_len);
    std::string out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        const uint8_t c = v.coord(i);
        out.push_back(c < 10 ? static_cast<char>('0' + c) : static_cast<char>('a' + c - 10));
    }
    return out;
}

}  // namespace lexikit
