#include "rankdrop/poly.hpp"

#include "rankdrop/error.hpp"
#include "rankdrop/matrix.hpp"

#include <algorithm>
#include <map>

namespace rankdrop {

namespace {

void strip_trailing_zeros(std::vector<Rat>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

} // namespace

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    strip_trailing_zeros(c_);
}

Poly Poly::constant(const Rat& v) { return Poly(std::vector<Rat>{v}); }

Rat Poly::leading() const {
    if (c_.empty()) throw Error(ErrorKind::DegenerateInput, "leading coefficient of zero polynomial");
    return c_.back();
}

Rat Poly::eval(const Rat& t) const {
    Rat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
    return acc;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> out(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return Poly(std::move(out));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Rat> out(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] -= o.c_[i];
    return Poly(std::move(out));
}

Poly Poly::operator*(const Poly& o) const {
    if (c_.empty() || o.c_.empty()) return Poly();
    std::vector<Rat> out(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(out));
}

Poly Poly::scaled(const Rat& s) const {
    std::vector<Rat> out(c_);
    for (auto& v : out) v *= s;
    return Poly(std::move(out));
}

std::pair<Poly, Poly> poly_divmod(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw Error(ErrorKind::DegenerateInput, "polynomial division by zero");
    std::vector<Rat> rem(num.coeffs());
    const long dd = den.degree();
    if (num.degree() < dd) return {Poly(), num};
    std::vector<Rat> quo(static_cast<std::size_t>(num.degree() - dd) + 1, Rat(0));
    const Rat lead = den.leading();
    for (long k = num.degree() - dd; k >= 0; --k) {
        const Rat q = rem[static_cast<std::size_t>(k + dd)] / lead;
        quo[static_cast<std::size_t>(k)] = q;
        if (q == 0) continue;
        for (long i = 0; i <= dd; ++i)
            rem[static_cast<std::size_t>(k + i)] -= q * den.coeff(static_cast<std::size_t>(i));
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = poly_divmod(x, y).second;
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return x.scaled(Rat(1) / x.leading());
}

Poly lagrange_interpolate(const std::vector<std::pair<Rat, Rat>>& points) {
    if (points.empty()) throw Error(ErrorKind::DegenerateInput, "interpolation needs at least one point");
    Poly result;
    for (std::size_t i = 0; i < points.size(); ++i) {
        Poly basis = Poly::constant(Rat(1));
        Rat denom(1);
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            if (points[j].first == points[i].first)
                throw Error(ErrorKind::DegenerateInput, "interpolation abscissae must be distinct");
            basis = basis * Poly({-points[j].first, Rat(1)});
            denom *= points[i].first - points[j].first;
        }
        result = result + basis.scaled(points[i].second / denom);
    }
    return result;
}

Rat sylvester_resultant(const Poly& a, const Poly& b, std::size_t formal_deg_a,
                        std::size_t formal_deg_b) {
    const std::size_t n = formal_deg_a + formal_deg_b;
    if (n == 0) return Rat(1);
    QMatrix s(n, n);
    for (std::size_t r = 0; r < formal_deg_b; ++r)
        for (std::size_t i = 0; i <= formal_deg_a; ++i)
            s.at(r, r + i) = a.coeff(formal_deg_a - i);
    for (std::size_t r = 0; r < formal_deg_a; ++r)
        for (std::size_t i = 0; i <= formal_deg_b; ++i)
            s.at(formal_deg_b + r, r + i) = b.coeff(formal_deg_b - i);
    return det(s);
}

namespace {

Int mulmod(const Int& a, const Int& b, const Int& m) { return a * b % m; }

Int powmod(Int base, Int exp, const Int& m) {
    Int acc(1);
    base %= m;
    while (exp > 0) {
        if ((exp & 1) != 0) acc = mulmod(acc, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return acc;
}

bool is_probable_prime(const Int& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        Int x = powmod(Int(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned i = 0; i + 1 < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

Int pollard_rho(const Int& n) {
    if (n % 2 == 0) return Int(2);
    for (Int c(1); ; ++c) {
        Int x(2), y(2), d(1);
        while (d == 1) {
            x = (mulmod(x, x, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            d = boost::multiprecision::gcd(x >= y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_into(const Int& n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    const Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

std::map<Int, unsigned> factorize(Int n) {
    std::map<Int, unsigned> out;
    for (int p : {2, 3, 5, 7, 11, 13}) {
        while (n % p == 0) {
            ++out[Int(p)];
            n /= p;
        }
    }
    for (Int p(17); p * p <= n && p < 100000; p += 2) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n > 1) factor_into(n, out);
    return out;
}

} // namespace

std::vector<Int> positive_divisors(const Int& n) {
    if (n == 0) throw Error(ErrorKind::DegenerateInput, "divisors of zero");
    const auto factors = factorize(boost::multiprecision::abs(n));
    std::vector<Int> divs{Int(1)};
    for (const auto& [p, e] : factors) {
        const std::size_t base = divs.size();
        Int pk(1);
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

Poly derivative(const Poly& p) {
    if (p.degree() < 1) return Poly();
    std::vector<Rat> out(static_cast<std::size_t>(p.degree()), Rat(0));
    for (std::size_t i = 1; i < p.coeffs().size(); ++i) {
        out[i - 1] = Rat(Int(i)) * p.coeffs()[i];
    }
    return Poly(std::move(out));
}

Poly primitive_part(const Poly& p) {
    if (p.is_zero()) return p;
    Int scale(1);
    for (const auto& c : p.coeffs())
        scale = scale / boost::multiprecision::gcd(scale, boost::multiprecision::denominator(c)) *
                boost::multiprecision::denominator(c);
    Int content(0);
    for (const auto& c : p.coeffs()) {
        const Int num = boost::multiprecision::numerator(c) *
                        (scale / boost::multiprecision::denominator(c));
        content = boost::multiprecision::gcd(content, num);
    }
    std::vector<Rat> out;
    out.reserve(p.coeffs().size());
    const Rat factor(scale, content);
    for (const auto& c : p.coeffs()) out.push_back(c * factor);
    return Poly(std::move(out));
}

namespace {

Int rat_floor(const Rat& q) {
    const Int num = boost::multiprecision::numerator(q);
    const Int den = boost::multiprecision::denominator(q);
    Int quo = num / den;
    if (num < 0 && quo * den != num) --quo;
    return quo;
}

} // namespace

Rat simplest_rational_between(const Rat& lo, const Rat& hi) {
    if (lo > hi) throw Error(ErrorKind::DegenerateInput, "empty interval");
    if (lo <= 0 && hi >= 0) return Rat(0);
    if (hi < 0) return -simplest_rational_between(-hi, -lo);
    // Now 0 < lo <= hi: walk the continued fraction of the interval.
    const Int fl = rat_floor(lo);
    if (hi >= fl + 1 || lo == fl) return Rat(lo == fl ? fl : fl + 1);
    // Both endpoints share the integer part; recurse on the fractional tail.
    const Rat tail = simplest_rational_between(Rat(1) / (hi - Rat(fl)), Rat(1) / (lo - Rat(fl)));
    return Rat(fl) + Rat(1) / tail;
}

namespace {

/// Sturm chain of a squarefree polynomial, each member scaled to coprime
/// integer coefficients (positive factors, so the sign pattern survives).
std::vector<Poly> sturm_chain(const Poly& squarefree) {
    std::vector<Poly> chain{primitive_part(squarefree), primitive_part(derivative(squarefree))};
    while (!chain.back().is_zero()) {
        const Poly rem = poly_divmod(chain[chain.size() - 2], chain.back()).second;
        chain.push_back(primitive_part(rem.scaled(Rat(-1))));
    }
    chain.pop_back();
    return chain;
}

int sign_of(const Rat& q) { return q == 0 ? 0 : (q > 0 ? 1 : -1); }

std::size_t sign_variations(const std::vector<Poly>& chain, const Rat& x) {
    std::size_t changes = 0;
    int prev = 0;
    for (const auto& p : chain) {
        const int s = sign_of(p.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

/// Roots found by isolating every real root of the squarefree part and
/// testing the simplest rational inside each shrinking isolating interval.
std::vector<Rat> sturm_rational_roots(const Poly& p) {
    const Poly sf = primitive_part(poly_divmod(p, poly_gcd(p, derivative(p))).first);
    if (sf.degree() < 1) return {};
    const std::vector<Poly> chain = sturm_chain(sf);
    // Cauchy bound: all real roots lie strictly inside [-b, b].
    Rat bound(1);
    for (const auto& c : sf.coeffs()) {
        const Rat m = boost::multiprecision::abs(c / sf.leading());
        if (m > bound) bound = m;
    }
    bound += 1;
    std::vector<Rat> roots;
    // Each stack entry is an open interval with non-root endpoints, tagged
    // with the number of real roots inside.
    struct Segment {
        Rat lo, hi;
        std::size_t count;
    };
    std::vector<Segment> work;
    const std::size_t total =
        sign_variations(chain, -bound) - sign_variations(chain, bound);
    if (total > 0) work.push_back({-bound, bound, total});
    while (!work.empty()) {
        Segment seg = work.back();
        work.pop_back();
        if (seg.count == 1) {
            // Shrink and try the simplest rational candidate as we go.
            Rat lo = seg.lo, hi = seg.hi;
            bool found = false;
            for (int step = 0; step < 420 && !found; ++step) {
                const Rat cand = simplest_rational_between(lo, hi);
                if (sf.eval(cand) == 0) {
                    roots.push_back(cand);
                    found = true;
                    break;
                }
                const Rat mid = (lo + hi) / 2;
                const int sm = sign_of(sf.eval(mid));
                if (sm == 0) {
                    roots.push_back(mid);
                    found = true;
                    break;
                }
                if (sign_of(sf.eval(lo)) == sm) lo = mid;
                else hi = mid;
            }
            // Give up after ~420 halvings: the root is irrational (or of
            // absurd height) and contributes no rational root.
            continue;
        }
        // Split at a non-root point.
        Rat mid = (seg.lo + seg.hi) / 2;
        Rat nudge = (seg.hi - seg.lo) / 4;
        while (sf.eval(mid) == 0) {
            roots.push_back(mid);
            mid += nudge;
            nudge /= 3;
        }
        const std::size_t left =
            sign_variations(chain, seg.lo) - sign_variations(chain, mid);
        const std::size_t right = sign_variations(chain, mid) - sign_variations(chain, seg.hi);
        if (left > 0) work.push_back({seg.lo, mid, left});
        if (right > 0) work.push_back({mid, seg.hi, right});
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

} // namespace

std::vector<Rat> rational_roots(const Poly& p) {
    if (p.is_zero()) throw Error(ErrorKind::DegenerateInput, "root search on zero polynomial");
    // Clear denominators to get integer coefficients.
    Int scale(1);
    for (const auto& c : p.coeffs())
        scale = scale / boost::multiprecision::gcd(scale, boost::multiprecision::denominator(c)) *
                boost::multiprecision::denominator(c);
    std::vector<Int> ic;
    ic.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs())
        ic.push_back(boost::multiprecision::numerator(c) *
                     (scale / boost::multiprecision::denominator(c)));

    std::vector<Rat> roots;
    std::size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;
    if (low == ic.size()) throw Error(ErrorKind::DegenerateInput, "root search on zero polynomial");
    if (low > 0) roots.emplace_back(0);
    if (low + 1 < ic.size()) {
        // Divisor enumeration factors the extreme coefficients; beyond 2^48
        // that can stall on large prime factors, so switch to Sturm
        // isolation, which never factors anything.
        const Int limit = Int(1) << 48;
        if (boost::multiprecision::abs(ic[low]) < limit &&
            boost::multiprecision::abs(ic.back()) < limit) {
            const auto nums = positive_divisors(ic[low]);
            const auto dens = positive_divisors(ic.back());
            for (const auto& num : nums)
                for (const auto& den : dens) {
                    if (boost::multiprecision::gcd(num, den) != 1) continue;
                    for (int sign : {1, -1}) {
                        const Rat cand(Int(sign * num), den);
                        if (p.eval(cand) == 0) roots.push_back(cand);
                    }
                }
        } else {
            for (const auto& r : sturm_rational_roots(p)) {
                if (r != 0) roots.push_back(r);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

} // namespace rankdrop
