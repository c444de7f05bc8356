#include <golden/qexp.hpp>

#include <ostream>
#include <sstream>

namespace golden {

std::ostream& operator<<(std::ostream& os, const IndexPair& p) {
    return os << "(" << p.i << "," << p.j << ")";
}

void QExp::set(long i, long j, Rat v) {
    if (i > prec_) throw math_error("QExp::set beyond precision");
    if (!is_valid_index(i, j))
        throw math_error("QExp::set at invalid index (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
    if (v == 0)
        coeffs_.erase({i, j});
    else
        coeffs_[{i, j}] = std::move(v);
}

void QExp::add(long i, long j, const Rat& v) { set(i, j, coeff(i, j) + v); }

bool QExp::operator==(const QExp& o) const {
    return prec_ == o.prec_ && coeffs_ == o.coeffs_;
}

QExp QExp::operator+(const QExp& o) const {
    QExp r(std::min(prec_, o.prec_));
    for (const auto& [idx, c] : coeffs_)
        if (idx.i <= r.prec_) r.set(idx.i, idx.j, c);
    for (const auto& [idx, c] : o.coeffs_)
        if (idx.i <= r.prec_) r.add(idx.i, idx.j, c);
    return r;
}

QExp QExp::operator-(const QExp& o) const {
    QExp r(std::min(prec_, o.prec_));
    for (const auto& [idx, c] : coeffs_)
        if (idx.i <= r.prec_) r.set(idx.i, idx.j, c);
    for (const auto& [idx, c] : o.coeffs_)
        if (idx.i <= r.prec_) r.add(idx.i, idx.j, -c);
    return r;
}

QExp QExp::operator*(const QExp& o) const {
    // index addition is exponent addition: both traces are additive
    QExp r(std::min(prec_, o.prec_));
    for (const auto& [a, ca] : coeffs_) {
        if (a.i > r.prec_) break;
        for (const auto& [b, cb] : o.coeffs_) {
            if (a.i + b.i > r.prec_) break;
            r.add(a.i + b.i, a.j + b.j, ca * cb);
        }
    }
    return r;
}

QExp QExp::operator*(const Rat& c) const {
    QExp r(prec_);
    if (c == 0) return r;
    for (const auto& [idx, v] : coeffs_) r.set(idx.i, idx.j, v * c);
    return r;
}

QExp QExp::pow(unsigned e) const {
    QExp r = QExp::one(prec_);
    QExp b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

std::optional<IndexPair> QExp::nu() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.begin()->first;
}

std::optional<IndexPair> QExp::nu_minus_constant() const {
    for (const auto& [idx, c] : coeffs_) {
        if (idx == IndexPair{0, 0}) continue;
        (void)c;
        return idx;
    }
    return std::nullopt;
}

std::vector<Rat> QExp::restrict_q1() const {
    std::vector<Rat> out(static_cast<size_t>(prec_) + 1, Rat(0));
    for (const auto& [idx, c] : coeffs_) out[idx.i] += c;
    return out;
}

std::map<long, Rat> QExp::restrict_q0() const {
    // column j is complete iff every valid (i,j) has i <= prec
    std::map<long, Rat> sums;
    sums[0] = 0;
    for (long j = 1; j <= 4 * prec_ + 4; ++j) {
        bool any = false, all_in = true;
        for (long i = 1; i <= j; ++i) {
            if (!is_valid_index(i, j)) continue;
            any = true;
            if (i > prec_) all_in = false;
        }
        if (any && all_in) sums[j] = 0;
    }
    for (const auto& [idx, c] : coeffs_) {
        auto it = sums.find(idx.j);
        if (it != sums.end()) it->second += c;
    }
    return sums;
}

Rat QExp::row_sum(long i) const {
    if (i > prec_) throw precision_error("row_sum beyond precision");
    Rat s = 0;
    for (long j : valid_js(i)) s += coeff(i, j);
    return s;
}

Rat QExp::column_sum_symmetric(long j) const {
    Rat s = 0;
    for (long i = 1; i <= j; ++i) {
        if (!is_valid_index(i, j)) continue;
        if (i <= prec_) {
            s += coeff(i, j);
        } else if (j - i >= 0 && j - i <= prec_ && is_valid_index(j - i, j)) {
            s += coeff(j - i, j);
        } else {
            throw precision_error("column sum at j=" + std::to_string(j) +
                                  " needs indices beyond precision");
        }
    }
    return s;
}

bool QExp::check_symmetric() const {
    for (const auto& [idx, c] : coeffs_) {
        if (idx == IndexPair{0, 0}) continue;
        long pi = idx.j - idx.i;
        if (pi > prec_) continue;  // partner not stored; cannot refute
        if (coeff(pi, idx.j) != c) return false;
    }
    return true;
}

bool QExp::check_unit_invariant() const {
    for (long i = 0; i <= prec_; ++i) {
        for (long j : valid_js(i)) {
            long i2 = 4 * i - j, j2 = 5 * i - j;
            if (i2 < 0 || i2 > prec_) continue;
            if (!is_valid_index(i2, j2)) continue;
            if (coeff(i, j) != coeff(i2, j2)) return false;
        }
    }
    return true;
}

QExp QExp::truncated(long prec) const {
    if (prec > prec_) throw math_error("truncated: cannot enlarge precision");
    QExp r(prec);
    for (const auto& [idx, c] : coeffs_)
        if (idx.i <= prec) r.set(idx.i, idx.j, c);
    return r;
}

std::string QExp::dump() const {
    std::ostringstream os;
    os << "qexp prec " << prec_ << "\n";
    for (const auto& [idx, c] : coeffs_)
        os << idx.i << " " << idx.j << " " << c.get_str() << "\n";
    return os.str();
}

QExp QExp::parse(const std::string& text) {
    std::istringstream is(text);
    std::string word;
    long prec = -1;
    if (!(is >> word) || word != "qexp") throw math_error("qexp dump: bad header");
    if (!(is >> word) || word != "prec" || !(is >> prec))
        throw math_error("qexp dump: bad precision header");
    QExp f(prec);
    long i, j;
    std::string frac;
    while (is >> i >> j >> frac) {
        Rat c(frac);
        c.canonicalize();
        f.set(i, j, c);
    }
    return f;
}

std::ostream& operator<<(std::ostream& os, const QExp& f) { return os << f.dump(); }

}  // namespace golden
