#include "clutterlab/field.hpp"

#include <algorithm>

namespace clutterlab {

FieldSpec FieldSpec::parse(const std::string& s) {
    if (s == "rationals" || s == "qq" || s == "q") return rationals();
    if (s.rfind("gf", 0) == 0) {
        int64_t p = std::stoll(s.substr(2));
        if (p < 2) throw std::invalid_argument("field characteristic must be a prime >= 2");
        for (int64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) throw std::invalid_argument("field characteristic must be prime");
        return gfp(p);
    }
    throw std::invalid_argument("unknown field spec: " + s);
}

BigInt::BigInt(int64_t v) {
    if (v < 0) {
        sign_ = -1;
        v = -v;
    }
    while (v) {
        mag_.push_back(uint32_t(v & 0xffffffffu));
        v >>= 32;
    }
}

void BigInt::trim(std::vector<uint32_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

int BigInt::compare_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
    std::vector<uint32_t> out(std::max(a.size(), b.size()) + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < out.size(); ++i) {
        uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        out[i] = uint32_t(s & 0xffffffffu);
        carry = s >> 32;
    }
    trim(out);
    return out;
}

// requires |a| >= |b|
std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
    std::vector<uint32_t> out(a.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t s = int64_t(a[i]) - borrow - (i < b.size() ? int64_t(b[i]) : 0);
        if (s < 0) {
            s += int64_t(1) << 32;
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[i] = uint32_t(s);
    }
    trim(out);
    return out;
}

BigInt BigInt::negated() const {
    BigInt out = *this;
    out.sign_ = -out.sign_;
    return out;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    BigInt out;
    if (a.sign() == 0) return b;
    if (b.sign() == 0) return a;
    if (a.sign_ == b.sign_) {
        out.sign_ = a.sign_;
        out.mag_ = BigInt::add_mag(a.mag_, b.mag_);
        return out;
    }
    int cmp = BigInt::compare_mag(a.mag_, b.mag_);
    if (cmp == 0) return BigInt();
    if (cmp > 0) {
        out.sign_ = a.sign_;
        out.mag_ = BigInt::sub_mag(a.mag_, b.mag_);
    } else {
        out.sign_ = b.sign_;
        out.mag_ = BigInt::sub_mag(b.mag_, a.mag_);
    }
    return out;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + b.negated(); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero()) return BigInt();
    BigInt out;
    out.sign_ = a.sign_ * b.sign_;
    out.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
    for (size_t i = 0; i < a.mag_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.mag_.size(); ++j) {
            uint64_t cur = out.mag_[i + j] + uint64_t(a.mag_[i]) * b.mag_[j] + carry;
            out.mag_[i + j] = uint32_t(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        size_t k = i + b.mag_.size();
        while (carry) {
            uint64_t cur = out.mag_[k] + carry;
            out.mag_[k] = uint32_t(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    BigInt::trim(out.mag_);
    return out;
}

// binary shift-and-subtract long division; adequate for the matrix sizes
// this project ranks over the rationals
BigInt BigInt::divide_exact(const BigInt& b) const {
    if (b.is_zero()) throw std::invalid_argument("division by zero");
    if (is_zero()) return BigInt();
    int cmp = compare_mag(mag_, b.mag_);
    if (cmp < 0) throw std::invalid_argument("inexact division");
    int total_bits = int(mag_.size()) * 32;
    std::vector<uint32_t> rem;
    std::vector<uint32_t> quot((mag_.size()), 0);
    for (int bit = total_bits - 1; bit >= 0; --bit) {
        // rem = rem*2 + bit
        uint32_t carry = (mag_[bit >> 5] >> (bit & 31)) & 1u;
        for (size_t i = 0; i < rem.size(); ++i) {
            uint32_t next = rem[i] >> 31;
            rem[i] = (rem[i] << 1) | carry;
            carry = next;
        }
        if (carry) rem.push_back(carry);
        trim(rem);
        if (compare_mag(rem, b.mag_) >= 0) {
            rem = sub_mag(rem, b.mag_);
            quot[bit >> 5] |= uint32_t(1) << (bit & 31);
        }
    }
    if (!rem.empty()) throw std::invalid_argument("inexact division");
    BigInt out;
    out.sign_ = sign_ * b.sign_;
    out.mag_ = std::move(quot);
    trim(out.mag_);
    if (out.mag_.empty()) return BigInt();
    return out;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::vector<uint32_t> work = mag_;
    std::string digits;
    while (!work.empty()) {
        uint64_t rem = 0;
        for (size_t i = work.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | work[i];
            work[i] = uint32_t(cur / 10);
            rem = cur % 10;
        }
        digits += char('0' + rem);
        trim(work);
    }
    if (sign_ < 0) digits += '-';
    std::reverse(digits.begin(), digits.end());
    return digits;
}

long rank_gf2(std::vector<std::vector<uint64_t>> rows, int ncols) {
    long rank = 0;
    int words = (ncols + 63) / 64;
    std::vector<int> pivot_of_col(ncols, -1);
    for (auto& row : rows) {
        row.resize(words, 0);
        for (int c = 0; c < ncols; ++c) {
            if (!((row[c >> 6] >> (c & 63)) & 1u)) continue;
            int pr = pivot_of_col[c];
            if (pr < 0) {
                pivot_of_col[c] = int(&row - rows.data());
                ++rank;
                break;
            }
            for (int w = 0; w < words; ++w) row[w] ^= rows[pr][w];
        }
    }
    return rank;
}

long rank_gfp(std::vector<std::vector<int64_t>> rows, int64_t p) {
    if (rows.empty()) return 0;
    size_t ncols = rows.front().size();
    auto norm = [p](int64_t v) {
        v %= p;
        return v < 0 ? v + p : v;
    };
    auto inverse = [p, &norm](int64_t a) {
        // extended Euclid
        int64_t t = 0, newt = 1, r = p, newr = norm(a);
        while (newr != 0) {
            int64_t q = r / newr;
            std::swap(t -= q * newt, newt);
            std::swap(r -= q * newr, newr);
        }
        return norm(t);
    };
    long rank = 0;
    size_t pivot_row = 0;
    for (size_t col = 0; col < ncols && pivot_row < rows.size(); ++col) {
        size_t sel = pivot_row;
        while (sel < rows.size() && norm(rows[sel][col]) == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[pivot_row]);
        int64_t inv = inverse(rows[pivot_row][col]);
        for (size_t c = col; c < ncols; ++c)
            rows[pivot_row][c] = norm(rows[pivot_row][c]) * inv % p;
        for (size_t r = pivot_row + 1; r < rows.size(); ++r) {
            int64_t f = norm(rows[r][col]);
            if (!f) continue;
            for (size_t c = col; c < ncols; ++c)
                rows[r][c] = norm(norm(rows[r][c]) - f * rows[pivot_row][c] % p);
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

long rank_rationals(std::vector<std::vector<BigInt>> rows) {
    if (rows.empty()) return 0;
    size_t ncols = rows.front().size();
    long rank = 0;
    size_t pr = 0;
    BigInt prev_pivot(1);
    for (size_t col = 0; col < ncols && pr < rows.size(); ++col) {
        size_t sel = pr;
        while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[pr]);
        const BigInt pivot = rows[pr][col];
        for (size_t r = pr + 1; r < rows.size(); ++r) {
            for (size_t c = col + 1; c < ncols; ++c)
                rows[r][c] =
                    (pivot * rows[r][c] - rows[r][col] * rows[pr][c]).divide_exact(prev_pivot);
            rows[r][col] = BigInt();
        }
        prev_pivot = pivot;
        ++pr;
        ++rank;
    }
    return rank;
}

long matrix_rank(const std::vector<std::vector<int8_t>>& rows, const FieldSpec& field) {
    if (rows.empty() || rows.front().empty()) return 0;
    size_t ncols = rows.front().size();
    if (field.kind == FieldSpec::Kind::rationals) {
        std::vector<std::vector<BigInt>> m(rows.size());
        for (size_t r = 0; r < rows.size(); ++r) {
            m[r].reserve(ncols);
            for (int8_t v : rows[r]) m[r].emplace_back(v);
        }
        return rank_rationals(std::move(m));
    }
    if (field.p == 2) {
        std::vector<std::vector<uint64_t>> m(rows.size(),
                                             std::vector<uint64_t>((ncols + 63) / 64, 0));
        for (size_t r = 0; r < rows.size(); ++r)
            for (size_t c = 0; c < ncols; ++c)
                if (rows[r][c] & 1) m[r][c >> 6] ^= uint64_t(1) << (c & 63);
        return rank_gf2(std::move(m), int(ncols));
    }
    std::vector<std::vector<int64_t>> m(rows.size(), std::vector<int64_t>(ncols, 0));
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < ncols; ++c) m[r][c] = rows[r][c];
    return rank_gfp(std::move(m), field.p);
}

}  // namespace clutterlab
