#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace clutterlab {

/// Coefficient field for homology ranks: a prime field or the rationals.
struct FieldSpec {
    enum class Kind { prime, rationals } kind = Kind::prime;
    int64_t p = 2;

    static FieldSpec gf2() { return FieldSpec{Kind::prime, 2}; }
    static FieldSpec gfp(int64_t prime) { return FieldSpec{Kind::prime, prime}; }
    static FieldSpec rationals() { return FieldSpec{Kind::rationals, 0}; }

    bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
    std::string to_string() const {
        return kind == Kind::rationals ? "rationals" : "gf" + std::to_string(p);
    }
    static FieldSpec parse(const std::string& s);
};

/// Arbitrary-precision signed integer, base 2^32. Only what exact
/// fraction-free elimination needs: add, subtract, multiply, exact division.
class BigInt {
public:
    BigInt() = default;
    BigInt(int64_t v);

    bool is_zero() const { return mag_.empty(); }
    int sign() const { return is_zero() ? 0 : sign_; }
    BigInt negated() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    /// b must divide *this exactly.
    BigInt divide_exact(const BigInt& b) const;

    bool operator==(const BigInt& o) const { return sign() == o.sign() && mag_ == o.mag_; }
    std::string to_string() const;

private:
    static int compare_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    static void trim(std::vector<uint32_t>& v);

    int sign_ = 1;
    std::vector<uint32_t> mag_;  // little-endian, no trailing zeros
};

/// Rank of a dense 0/+1/-1 matrix over the chosen field; rows[i][j] holds
/// the signed entry.
long matrix_rank(const std::vector<std::vector<int8_t>>& rows, const FieldSpec& field);

long rank_gf2(std::vector<std::vector<uint64_t>> rows, int ncols);
long rank_gfp(std::vector<std::vector<int64_t>> rows, int64_t p);
long rank_rationals(std::vector<std::vector<BigInt>> rows);

}  // namespace clutterlab
