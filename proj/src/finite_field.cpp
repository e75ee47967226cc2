/*
   Copyright 2026 The a1lab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "a1lab/finite_field.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>

#include "a1lab/error.hpp"

namespace a1lab {

namespace detail {

struct FieldData {
    std::uint64_t p = 0;
    unsigned k = 0;
    std::uint64_t q = 0;
    std::vector<std::uint64_t> modulus;  // c0..ck, monic
    std::vector<std::uint64_t> pow_p;    // p^0..p^k
    bool has_tables = false;
    std::vector<std::uint32_t> exp;  // exp[i] = g^i, i < q-1
    std::vector<std::uint32_t> log;  // log[exp[i]] = i
};

}  // namespace detail

namespace {

using detail::FieldData;

constexpr unsigned kMaxDegree = 32;
constexpr std::uint64_t kMaxPrime = 101;
constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;

using Digits = std::array<std::uint64_t, kMaxDegree>;

Digits decode(const FieldData& f, std::uint64_t v) {
    Digits d{};
    for (unsigned i = 0; i < f.k; ++i) {
        d[i] = v % f.p;
        v /= f.p;
    }
    return d;
}

std::uint64_t encode(const FieldData& f, const std::uint64_t* d) {
    std::uint64_t v = 0;
    for (unsigned i = f.k; i-- > 0;) v = v * f.p + d[i];
    return v;
}

std::uint64_t raw_add(const FieldData& f, std::uint64_t a, std::uint64_t b) {
    if (f.p == 2) return a ^ b;
    if (f.k == 1) return (a + b) % f.p;
    std::uint64_t r = 0;
    for (unsigned i = 0; i < f.k; ++i) {
        r += ((a % f.p + b % f.p) % f.p) * f.pow_p[i];
        a /= f.p;
        b /= f.p;
    }
    return r;
}

std::uint64_t raw_neg(const FieldData& f, std::uint64_t a) {
    if (f.p == 2) return a;
    if (f.k == 1) return (f.p - a) % f.p;
    std::uint64_t r = 0;
    for (unsigned i = 0; i < f.k; ++i) {
        r += ((f.p - a % f.p) % f.p) * f.pow_p[i];
        a /= f.p;
    }
    return r;
}

// Schoolbook product in the power basis followed by reduction by the monic modulus.
std::uint64_t slow_mul(const FieldData& f, std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (f.k == 1) return (a * b) % f.p;
    const Digits da = decode(f, a);
    const Digits db = decode(f, b);
    std::array<std::uint64_t, 2 * kMaxDegree> prod{};
    for (unsigned i = 0; i < f.k; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < f.k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % f.p;
    }
    for (unsigned i = 2 * f.k - 2; i >= f.k; --i) {
        const std::uint64_t c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (unsigned j = 0; j < f.k; ++j) {
            prod[i - f.k + j] = (prod[i - f.k + j] + c * ((f.p - f.modulus[j]) % f.p)) % f.p;
        }
    }
    return encode(f, prod.data());
}

std::uint64_t slow_pow(const FieldData& f, std::uint64_t a, std::uint64_t n) {
    std::uint64_t result = 1;
    while (n > 0) {
        if (n & 1) result = slow_mul(f, result, a);
        a = slow_mul(f, a, a);
        n >>= 1;
    }
    return result;
}

std::uint64_t raw_mul(const FieldData& f, std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (f.has_tables) {
        const std::uint64_t e = (std::uint64_t{f.log[a]} + f.log[b]) % (f.q - 1);
        return f.exp[e];
    }
    return slow_mul(f, a, b);
}

std::uint64_t raw_pow(const FieldData& f, std::uint64_t a, std::uint64_t n) {
    if (n == 0) return 1;
    if (a == 0) return 0;
    n %= (f.q - 1);
    if (f.has_tables) {
        const std::uint64_t e = (std::uint64_t{f.log[a]} * n) % (f.q - 1);
        return f.exp[e];
    }
    return slow_pow(f, a, n);
}

// ---- Dense polynomials over Z/p, used only while searching for a modulus. ----

using ZpPoly = std::vector<std::uint64_t>;

void trim(ZpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t zp_inv(std::uint64_t a, std::uint64_t p) {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

ZpPoly zp_rem(ZpPoly a, const ZpPoly& b, std::uint64_t p) {
    trim(a);
    const std::uint64_t inv = zp_inv(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t c = a.back() * inv % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + (p - c) * b[i]) % p;
        trim(a);
    }
    return a;
}

ZpPoly zp_mulmod(const ZpPoly& a, const ZpPoly& b, const ZpPoly& m, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    ZpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return zp_rem(std::move(r), m, p);
}

ZpPoly zp_powmod(ZpPoly base, std::uint64_t e, const ZpPoly& m, std::uint64_t p) {
    ZpPoly r{1};
    base = zp_rem(std::move(base), m, p);
    while (e) {
        if (e & 1) r = zp_mulmod(r, base, m, p);
        base = zp_mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

ZpPoly zp_gcd(ZpPoly a, ZpPoly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        ZpPoly r = zp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Ben-Or: f of degree k is irreducible iff gcd(f, x^(p^i) - x) = 1 for 1 <= i <= k/2.
bool zp_irreducible(const ZpPoly& f, std::uint64_t p) {
    const std::size_t k = f.size() - 1;
    ZpPoly h{0, 1};
    for (std::size_t i = 1; i <= k / 2; ++i) {
        h = zp_powmod(h, p, f, p);
        ZpPoly diff = h;
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        if (zp_gcd(f, diff, p).size() > 1) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

void build_tables(FieldData& f) {
    if (f.q - 1 == 1) {
        f.exp = {1};
        f.log.assign(2, 0);
        f.has_tables = true;
        return;
    }
    const auto factors = prime_factors(f.q - 1);
    std::uint64_t g = 0;
    for (std::uint64_t cand = 1; cand < f.q; ++cand) {
        bool primitive = true;
        for (std::uint64_t r : factors) {
            if (slow_pow(f, cand, (f.q - 1) / r) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            g = cand;
            break;
        }
    }
    f.exp.resize(f.q - 1);
    f.log.assign(f.q, 0);
    std::uint64_t x = 1;
    for (std::uint64_t i = 0; i + 1 < f.q; ++i) {
        f.exp[i] = static_cast<std::uint32_t>(x);
        f.log[x] = static_cast<std::uint32_t>(i);
        x = slow_mul(f, x, g);
    }
    f.has_tables = true;
}

struct Registry {
    std::mutex mutex;
    std::map<std::vector<std::uint64_t>, std::unique_ptr<FieldData>> fields;
};

Registry& registry() {
    static Registry r;
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n && d < (1u << 20); ++d)
        if (n % d == 0) return false;
    if (n < (std::uint64_t{1} << 40)) return true;
    // Miller-Rabin with a base set that is deterministic below 2^64.
    auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e, std::uint64_t m) {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, a, m);
            a = mulmod(a, a, m);
            e >>= 1;
        }
        return r;
    };
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Field Field::create(std::uint64_t p, unsigned k, std::uint64_t seed) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (p > kMaxPrime) throw Error(ErrorCode::Overflow, "characteristic " + std::to_string(p) + " exceeds 101");
    if (k < 1 || k > kMaxDegree) throw Error(ErrorCode::Overflow, "extension degree must be in [1, 32]");
    std::vector<std::uint64_t> pow_p{1};
    const std::uint64_t limit = std::uint64_t{1} << 63;
    for (unsigned i = 0; i < k; ++i) {
        if (pow_p.back() > limit / p) {
            throw Error(ErrorCode::Overflow, std::to_string(p) + "^" + std::to_string(k) + " exceeds 2^63");
        }
        pow_p.push_back(pow_p.back() * p);
    }

    ZpPoly modulus;
    if (k == 1) {
        modulus = {0, 1};
    } else {
        Rng rng(seed);
        for (;;) {
            modulus.assign(k + 1, 0);
            modulus[k] = 1;
            for (unsigned i = 0; i < k; ++i) modulus[i] = uniform_below(rng, p);
            if (modulus[0] != 0 && zp_irreducible(modulus, p)) break;
        }
    }

    std::vector<std::uint64_t> key{p};
    key.insert(key.end(), modulus.begin(), modulus.end());
    Registry& reg = registry();
    std::lock_guard lock(reg.mutex);
    auto it = reg.fields.find(key);
    if (it == reg.fields.end()) {
        auto data = std::make_unique<FieldData>();
        data->p = p;
        data->k = k;
        data->q = pow_p.back();
        data->modulus = std::move(modulus);
        data->pow_p = std::move(pow_p);
        if (data->q <= kTableLimit) build_tables(*data);
        it = reg.fields.emplace(std::move(key), std::move(data)).first;
    }
    return Field(it->second.get());
}

std::uint64_t Field::characteristic() const noexcept { return data_->p; }
unsigned Field::degree() const noexcept { return data_->k; }
std::uint64_t Field::order() const noexcept { return data_->q; }
std::span<const std::uint64_t> Field::modulus() const noexcept { return data_->modulus; }

std::string Field::header() const {
    std::ostringstream os;
    os << "GF(" << data_->p << "^" << data_->k << ");modulus=";
    for (std::size_t i = 0; i < data_->modulus.size(); ++i) os << (i ? "," : "") << data_->modulus[i];
    return os.str();
}

FieldElement Field::zero() const { return FieldElement(data_, 0); }
FieldElement Field::one() const { return FieldElement(data_, 1); }

FieldElement Field::from_int(std::int64_t value) const {
    const auto p = static_cast<std::int64_t>(data_->p);
    std::int64_t r = value % p;
    if (r < 0) r += p;
    return FieldElement(data_, static_cast<std::uint64_t>(r));
}

FieldElement Field::from_encoding(std::uint64_t encoding) const {
    if (encoding >= data_->q) {
        throw Error(ErrorCode::BadEncoding, std::to_string(encoding) + " is not an element of " + header());
    }
    return FieldElement(data_, encoding);
}

FieldElement Field::from_coords(std::span<const std::uint64_t> coords) const {
    if (coords.size() != data_->k) throw Error(ErrorCode::BadEncoding, "coordinate vector has wrong length");
    for (auto c : coords)
        if (c >= data_->p) throw Error(ErrorCode::BadEncoding, "coordinate out of range");
    return FieldElement(data_, encode(*data_, coords.data()));
}

std::vector<FieldElement> Field::elements() const {
    std::vector<FieldElement> out;
    out.reserve(data_->q);
    for (std::uint64_t v = 0; v < data_->q; ++v) out.push_back(FieldElement(data_, v));
    return out;
}

FieldElement Field::sample(Rng& rng) const { return FieldElement(data_, uniform_below(rng, data_->q)); }

FieldElement Field::sample_nonzero(Rng& rng) const {
    return FieldElement(data_, 1 + uniform_below(rng, data_->q - 1));
}

std::vector<FieldElement> Field::sample_distinct(std::size_t n, Rng& rng, bool nonzero) const {
    const std::uint64_t available = data_->q - (nonzero ? 1 : 0);
    if (n > available) {
        throw Error(ErrorCode::NotEnoughElements,
                    "requested " + std::to_string(n) + " distinct elements from " + std::to_string(available));
    }
    std::vector<FieldElement> out;
    out.reserve(n);
    if (available <= 4 * n) {
        std::vector<std::uint64_t> pool;
        for (std::uint64_t v = nonzero ? 1 : 0; v < data_->q; ++v) pool.push_back(v);
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t j = i + uniform_below(rng, pool.size() - i);
            std::swap(pool[i], pool[j]);
            out.push_back(FieldElement(data_, pool[i]));
        }
        return out;
    }
    std::set<std::uint64_t> seen;
    while (out.size() < n) {
        const FieldElement x = nonzero ? sample_nonzero(rng) : sample(rng);
        if (seen.insert(x.encoding()).second) out.push_back(x);
    }
    return out;
}

std::vector<std::uint64_t> FieldElement::coords() const {
    const Digits d = decode(*field_, value_);
    return {d.begin(), d.begin() + field_->k};
}

bool FieldElement::is_one() const noexcept { return value_ == 1; }

void FieldElement::check_same(const FieldElement& rhs) const {
    if (field_ != rhs.field_) throw Error(ErrorCode::MixedFields, "operands belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    check_same(rhs);
    return FieldElement(field_, raw_add(*field_, value_, rhs.value_));
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
    check_same(rhs);
    return FieldElement(field_, raw_add(*field_, value_, raw_neg(*field_, rhs.value_)));
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    check_same(rhs);
    return FieldElement(field_, raw_mul(*field_, value_, rhs.value_));
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const { return *this * rhs.inverse(); }

FieldElement FieldElement::operator-() const { return FieldElement(field_, raw_neg(*field_, value_)); }

FieldElement FieldElement::inverse() const {
    if (value_ == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    const FieldData& f = *field_;
    if (f.has_tables) return FieldElement(field_, f.exp[(f.q - 1 - f.log[value_]) % (f.q - 1)]);
    return FieldElement(field_, raw_pow(f, value_, f.q - 2));
}

FieldElement FieldElement::pow(std::uint64_t exponent) const {
    return FieldElement(field_, raw_pow(*field_, value_, exponent));
}

FieldElement FieldElement::frobenius() const { return pow(field_->p); }

FieldElement FieldElement::pth_root() const { return pow(field_->pow_p[field_->k - 1]); }

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.encoding(); }

}  // namespace a1lab
