#include <nldic/polynomial.hpp>

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>

#include <nldic/numtheory.hpp>

namespace nldic {

u32 Monomial::total_degree() const {
    u32 t = 0;
    for (u32 e : exps) t += e;
    return t;
}

namespace {

// Canonical term order: total degree ascending; ties broken so that the
// lexicographically larger exponent vector (X1-heavy) comes first.
bool term_before(const Monomial& a, const Monomial& b) {
    u32 ta = a.total_degree(), tb = b.total_degree();
    if (ta != tb) return ta < tb;
    return a.exps > b.exps;
}

i64 checked_coeff(i128 v, const char* what) {
    if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
        raise(Errc::Overflow, std::string(what) + ": coefficient exceeds 64-bit range");
    return static_cast<i64>(v);
}

} // namespace

MultiPoly::MultiPoly(int nvars, std::vector<Monomial> terms)
    : nvars_(nvars), terms_(std::move(terms)) {
    for (const auto& t : terms_)
        if (static_cast<int>(t.exps.size()) != nvars_)
            raise(Errc::InvalidArgument, "MultiPoly: exponent vector length mismatch");
    canonicalize();
}

void MultiPoly::canonicalize() {
    std::map<std::vector<u32>, i128> acc;
    for (auto& t : terms_) acc[t.exps] += t.coeff;
    terms_.clear();
    for (auto& [exps, c] : acc) {
        if (c == 0) continue;
        terms_.push_back({checked_coeff(c, "polynomial"), exps});
    }
    std::sort(terms_.begin(), terms_.end(), term_before);
}

void MultiPoly::add_term(i64 coeff, std::vector<u32> exps) {
    if (static_cast<int>(exps.size()) != nvars_)
        raise(Errc::InvalidArgument, "add_term: exponent vector length mismatch");
    terms_.push_back({coeff, std::move(exps)});
    canonicalize();
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        i64 c = t.coeff;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        u64 mag = c < 0 ? static_cast<u64>(-(c + 1)) + 1 : static_cast<u64>(c);
        bool has_vars = t.total_degree() > 0;
        if (!has_vars) {
            out += std::to_string(mag);
            continue;
        }
        bool star = false;
        if (mag != 1) {
            out += std::to_string(mag);
            star = true;
        }
        for (int j = 0; j < nvars_; ++j) {
            if (t.exps[j] == 0) continue;
            if (star) out += "*";
            out += "X" + std::to_string(j + 1);
            if (t.exps[j] > 1) out += "^" + std::to_string(t.exps[j]);
            star = true;
        }
    }
    return out;
}

DegreeProfile MultiPoly::degree_profile() const {
    if (terms_.empty()) raise(Errc::ZeroPolynomial, "degree_profile: zero polynomial");
    DegreeProfile p;
    p.per_variable.assign(nvars_, 0);
    p.total_degree = 0;
    p.min_total_degree = std::numeric_limits<u32>::max();
    for (const auto& t : terms_) {
        u32 tot = t.total_degree();
        p.total_degree = std::max(p.total_degree, tot);
        p.min_total_degree = std::min(p.min_total_degree, tot);
        for (int j = 0; j < nvars_; ++j)
            p.per_variable[j] = std::max(p.per_variable[j], t.exps[j]);
    }
    return p;
}

std::vector<Monomial> MultiPoly::min_degree_terms() const {
    if (terms_.empty()) raise(Errc::ZeroPolynomial, "min_degree_terms: zero polynomial");
    u32 min_tot = std::numeric_limits<u32>::max();
    for (const auto& t : terms_) min_tot = std::min(min_tot, t.total_degree());
    std::vector<Monomial> out;
    for (const auto& t : terms_)
        if (t.total_degree() == min_tot) out.push_back(t);
    return out;
}

namespace {

i128 ipow_checked(i128 base, u32 exp) {
    i128 r = 1;
    i128 b = base;
    while (exp > 0) {
        if (exp & 1) {
            if (__builtin_mul_overflow(r, b, &r))
                raise(Errc::Overflow, "integer evaluation exceeds 128-bit range");
        }
        exp >>= 1;
        if (exp == 0) break;
        if (__builtin_mul_overflow(b, b, &b))
            raise(Errc::Overflow, "integer evaluation exceeds 128-bit range");
    }
    return r;
}

} // namespace

MultiPoly MultiPoly::substitute(int var, i64 value) const {
    if (var < 1 || var > nvars_)
        raise(Errc::InvalidArgument, "substitute: variable index out of range");
    MultiPoly out(nvars_);
    for (const auto& t : terms_) {
        u32 e = t.exps[var - 1];
        i128 c = t.coeff;
        if (e > 0) {
            if (__builtin_mul_overflow(c, ipow_checked(value, e), &c))
                raise(Errc::Overflow, "substitute: coefficient exceeds 128-bit range");
        }
        Monomial m{checked_coeff(c, "substitute"), t.exps};
        m.exps[var - 1] = 0;
        out.terms_.push_back(std::move(m));
    }
    out.canonicalize();
    return out;
}

bool MultiPoly::functionally_zero(u64 q) const {
    if (terms_.empty()) return true;
    // Only variables that actually occur affect the value.
    std::vector<int> active;
    for (int j = 0; j < nvars_; ++j)
        for (const auto& t : terms_)
            if (t.exps[j] > 0) {
                active.push_back(j);
                break;
            }
    u128 points = 1;
    bool exhaustive = true;
    for (int j = 0; j < nvars_; ++j) {
        points *= q;
        if (points > 1'000'000) {
            exhaustive = false;
            break;
        }
    }
    if (exhaustive) {
        std::vector<u64> x(nvars_, 0);
        u64 domain = 1;
        for (std::size_t k = 0; k < active.size(); ++k) domain *= q;
        for (u64 idx = 0; idx < domain; ++idx) {
            u64 rem = idx;
            for (int j : active) {
                x[j] = rem % q;
                rem /= q;
            }
            if (eval_mod(*this, x, q) != 0) return false;
        }
        return true;
    }
    // Formal reduction: coefficients mod q, exponents folded with X^q = X.
    std::map<std::vector<u32>, u64> reduced;
    for (const auto& t : terms_) {
        std::vector<u32> e = t.exps;
        for (auto& ex : e)
            if (ex >= 1) ex = static_cast<u32>((ex - 1) % (q - 1)) + 1;
        u64 c = static_cast<u64>(((t.coeff % static_cast<i64>(q)) + static_cast<i64>(q)) % static_cast<i64>(q));
        auto [it, inserted] = reduced.emplace(std::move(e), c);
        if (!inserted) it->second = (it->second + c) % q;
    }
    for (auto& [e, c] : reduced)
        if (c % q != 0) return false;
    return true;
}

i128 eval_poly(const MultiPoly& p, std::span<const u64> x, Semantics sem, u64 q) {
    if (x.size() != static_cast<std::size_t>(p.nvars()))
        raise(Errc::InvalidArgument, "eval_poly: point length mismatch");
    if (sem == Semantics::ModQ) {
        u64 acc = 0;
        for (const auto& t : p.terms()) {
            i64 cq = t.coeff % static_cast<i64>(q);
            u64 v = static_cast<u64>((cq + static_cast<i64>(q)) % static_cast<i64>(q));
            for (int j = 0; j < p.nvars(); ++j) {
                if (t.exps[j] == 0) continue;
                v = mulmod(v, powmod(x[j] % q, t.exps[j], q), q);
            }
            acc = (acc + v) % q;
        }
        return static_cast<i128>(acc);
    }
    i128 acc = 0;
    for (const auto& t : p.terms()) {
        i128 v = t.coeff;
        for (int j = 0; j < p.nvars(); ++j) {
            if (t.exps[j] == 0) continue;
            if (__builtin_mul_overflow(v, ipow_checked(static_cast<i128>(x[j]), t.exps[j]), &v))
                raise(Errc::Overflow, "integer evaluation exceeds 128-bit range");
        }
        if (__builtin_add_overflow(acc, v, &acc))
            raise(Errc::Overflow, "integer evaluation exceeds 128-bit range");
    }
    return acc;
}

MultiPoly poly_sum(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars() != b.nvars())
        raise(Errc::InvalidArgument, "poly_sum: variable count mismatch");
    MultiPoly out(a.nvars());
    out.terms_ = a.terms_;
    out.terms_.insert(out.terms_.end(), b.terms_.begin(), b.terms_.end());
    out.canonicalize();
    return out;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

struct Parser {
    const std::string& s;
    std::size_t i = 0;
    int nvars;       // 0 means infer
    int max_index = 0;

    explicit Parser(const std::string& text, int K) : s(text), nvars(K) {}

    [[noreturn]] void fail(std::size_t pos, const std::string& what) {
        Error err(Errc::SyntaxError,
                  "syntax error at position " + std::to_string(pos) + ": " + what);
        err.detail_a = pos;
        throw err;
    }

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() { return s[i]; }

    u64 number(const char* what) {
        skip_ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            fail(i, std::string("expected ") + what);
        u64 v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            if (v > (UINT64_MAX - 9) / 10) fail(i, "number too large");
            v = v * 10 + static_cast<u64>(s[i] - '0');
            ++i;
        }
        return v;
    }

    // factor := 'X' index ('^' exponent)?
    void factor(std::map<int, u64>& exps) {
        skip_ws();
        std::size_t pos = i;
        if (i >= s.size() || s[i] != 'X') fail(i, "expected variable 'X'");
        ++i;
        u64 idx = number("variable index");
        if (idx < 1 || (nvars > 0 && idx > static_cast<u64>(nvars))) {
            Error err(Errc::IndexOutOfRange,
                      "variable X" + std::to_string(idx) + " out of range at position " +
                          std::to_string(pos));
            err.detail_a = pos;
            throw err;
        }
        max_index = std::max(max_index, static_cast<int>(idx));
        u64 e = 1;
        skip_ws();
        if (i < s.size() && s[i] == '^') {
            ++i;
            std::size_t epos = i;
            e = number("exponent");
            if (e < 1) fail(epos, "exponent must be >= 1");
            if (e > 1'000'000) fail(epos, "exponent too large");
        }
        exps[static_cast<int>(idx)] += e;
    }

    // term := [integer '*']? factor ('*' factor)* | integer
    void term(int sign, std::vector<std::pair<i64, std::map<int, u64>>>& out) {
        skip_ws();
        if (i >= s.size()) fail(i, "expected term");
        i64 coeff = sign;
        std::map<int, u64> exps;
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            std::size_t npos = i;
            u64 mag = number("coefficient");
            if (mag > static_cast<u64>(std::numeric_limits<i64>::max()))
                fail(npos, "coefficient too large");
            coeff = sign * static_cast<i64>(mag);
            skip_ws();
            if (i < s.size() && s[i] == '*') {
                ++i;
                factor(exps);
            } else {
                out.emplace_back(coeff, std::move(exps)); // constant term
                return;
            }
        } else {
            factor(exps);
        }
        for (;;) {
            skip_ws();
            if (i < s.size() && s[i] == '*') {
                ++i;
                factor(exps);
                continue;
            }
            break;
        }
        out.emplace_back(coeff, std::move(exps));
    }

    MultiPoly parse() {
        std::vector<std::pair<i64, std::map<int, u64>>> raw;
        skip_ws();
        if (i >= s.size()) fail(i, "empty polynomial");
        int sign = 1;
        if (s[i] == '-') {
            ++i;
            sign = -1;
        }
        for (;;) {
            term(sign, raw);
            if (eof()) break;
            char c = peek();
            if (c == '+') sign = 1;
            else if (c == '-') sign = -1;
            else fail(i, "expected '+' or '-'");
            ++i;
        }
        int K = nvars > 0 ? nvars : std::max(max_index, 1);
        std::vector<Monomial> terms;
        for (auto& [coeff, exps] : raw) {
            std::vector<u32> ev(K, 0);
            for (auto& [idx, e] : exps) {
                if (e > 1'000'000) fail(0, "exponent too large");
                ev[idx - 1] = static_cast<u32>(e);
            }
            terms.push_back({coeff, std::move(ev)});
        }
        return MultiPoly(K, std::move(terms));
    }
};

} // namespace

MultiPoly parse_poly(const std::string& text, int nvars) {
    if (nvars < 1) raise(Errc::InvalidArgument, "parse_poly: nvars must be >= 1");
    Parser p(text, nvars);
    return p.parse();
}

MultiPoly parse_poly_infer(const std::string& text, int& nvars_out) {
    Parser p(text, 0);
    MultiPoly poly = p.parse();
    nvars_out = poly.nvars();
    return poly;
}

} // namespace nldic
