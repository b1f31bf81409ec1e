#include "dopt/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

namespace dopt {

EhlichConstants ehlich_constants(int n) {
    if (n < 3 || n % 4 != 3)
        throw ClassError("Ehlich constants require n = 3 (mod 4), got " + std::to_string(n));
    const int s = (n == 3) ? 3 : (n == 7) ? 5 : (n <= 59) ? 6 : 7;
    const int r = n / s;
    const int v = n - r * s;
    const int u = s - v;
    return {s, r, u, v};
}

namespace {

void check_bound_order(int n) {
    if (n < 1 || n > kMaxBoundOrder)
        throw OrderError("bound order must be in [1, " + std::to_string(kMaxBoundOrder) +
                         "], got " + std::to_string(n));
}

// Exact integer UB(n)^2 in 512 bits; every residue clears its square root
// denominators (for n = 3 mod 4 the bracket denominator A*B is absorbed by
// A^u * B^v since u >= 1 always and v >= 1 unless the v-term vanishes).
WideInt ub_squared_wide(int n) {
    if (n == 1 || n == 2 || n % 4 == 0) return wide_pow(n, n);
    if (n % 4 == 2) return WideInt(2 * n - 2) * (2 * n - 2) * wide_pow(n - 2, n - 2);
    if (n % 4 == 1) return wide_pow(n - 1, n - 1) * (2 * n - 1);
    const auto [s, r, u, v] = ehlich_constants(n);
    const long long A = n - 3 + 4ll * r;
    const long long B = n + 1 + 4ll * r;
    WideInt val = (n > 3) ? wide_pow(n - 3, n - s) : WideInt(1);
    if (v == 0) {
        val *= wide_pow(A, u - 1) * (A - static_cast<long long>(u) * r);
    } else {
        const long long inner = A * B - static_cast<long long>(u) * r * B -
                                static_cast<long long>(v) * (r + 1) * A;
        val *= wide_pow(A, u - 1) * wide_pow(B, v - 1) * inner;
    }
    return val;
}

long double to_ld(const WideInt& v) { return v.convert_to<long double>(); }
long double to_ld(const ExactInt& v) { return v.convert_to<long double>(); }

BoundValue bound_from_squared(const WideInt& sq, int residue) {
    BoundValue b;
    b.residue = residue;
    const WideInt root = boost::multiprecision::sqrt(sq);
    if (root * root == sq) {
        b.exact = root.convert_to<ExactInt>();
        b.approx = to_ld(root);
    } else {
        b.approx = sqrtl(to_ld(sq));
    }
    return b;
}

} // namespace

BoundValue classical_upper_bound(int n) {
    check_bound_order(n);
    return bound_from_squared(ub_squared_wide(n), n % 4);
}

ExactInt classical_upper_bound_squared(int n) {
    check_bound_order(n);
    if (n > 46) throw OrderError("squared classical bound exceeds 256 bits for n > 46");
    return ub_squared_wide(n).convert_to<ExactInt>();
}

BoundValue local_bound_g(int k) {
    if (k < 1 || k > 40)
        throw OrderError("local g bound requires 1 <= k <= 40, got " + std::to_string(k));
    const WideInt sq = ub_squared_wide(k);
    BoundValue b;
    b.residue = k % 4;
    b.exact = ((WideInt(1) << k) * sq).convert_to<ExactInt>();
    b.approx = ldexpl(to_ld(sq), k);
    return b;
}

BoundValue local_bound_g1(int k) {
    if (k < 1 || k > 39)
        throw OrderError("local g1 bound requires 1 <= k <= 39, got " + std::to_string(k));
    const BoundValue bk = classical_upper_bound(k);
    const BoundValue bk1 = classical_upper_bound(k + 1);
    BoundValue b;
    b.residue = k % 4;
    if (bk.exact && bk1.exact)
        b.exact = ((WideInt(*bk.exact) * WideInt(*bk1.exact)) << k).convert_to<ExactInt>();
    b.approx = ldexpl(bk.approx * bk1.approx, k);
    return b;
}

std::optional<GlobalValue> known_global_maxdet(int order) {
    switch (order) {
        case 10: return GlobalValue{ExactInt(18) * exact_pow2(12), true};
        case 30: return GlobalValue{ExactInt(203) * exact_pow2(29) * ExactInt(96889010407ll), true};
        case 31: return GlobalValue{ExactInt(784) * exact_pow2(30) * ExactInt(96889010407ll), false};
        case 32: return GlobalValue{exact_pow2(80), true};
        default: return std::nullopt;
    }
}

double percent_of(const ExactInt& attained, const BoundValue& bound) {
    if (bound.exact) {
        // scaled integer ratio, exact to 1e-6 percent
        const WideInt scaled = WideInt(attained) * 100000000 / WideInt(*bound.exact);
        return static_cast<double>(scaled.convert_to<long double>() / 1000000.0L);
    }
    return static_cast<double>(100.0L * to_ld(attained) / bound.approx);
}

BoundReport efficiency_report(DesignClass cls, int k, const ExactInt& attained) {
    if (cls != DesignClass::g && cls != DesignClass::g1)
        throw ClassError("efficiency report covers classes g and g1 only");
    if (attained <= 0) throw Error("attained determinant must be positive");

    BoundReport r;
    r.cls = cls;
    r.k = k;
    r.order = (cls == DesignClass::g) ? 2 * k : 2 * k + 1;
    r.attained = attained;
    r.local_bound = (cls == DesignClass::g) ? local_bound_g(k) : local_bound_g1(k);
    r.classical_bound_at_order = classical_upper_bound(r.order);
    r.global = known_global_maxdet(r.order);
    r.pct_local = percent_of(attained, r.local_bound);
    if (r.global) {
        BoundValue gb;
        gb.exact = r.global->value;
        gb.approx = to_ld(r.global->value);
        gb.residue = r.order % 4;
        r.pct_global = percent_of(attained, gb);
    }
    if (r.order % 4 == 3) r.ehlich = ehlich_constants(r.order);

    // Attaining more than the class bound would contradict the theory; treat
    // it as corrupt input. Root-valued bounds get a float-evaluation margin.
    const double eps = r.local_bound.exact ? 0.0 : 1e-4;
    if (r.pct_local <= 0 || r.pct_local > 100.0 + eps)
        throw ClassError("attained determinant exceeds the class bound");
    return r;
}

namespace {

nlohmann::json json_of(const BoundValue& b) {
    nlohmann::json j;
    j["exact"] = b.exact ? nlohmann::json(to_decimal(*b.exact)) : nlohmann::json(nullptr);
    j["approx"] = static_cast<double>(b.approx);
    j["residue"] = b.residue;
    return j;
}

} // namespace

std::string to_json(const BoundValue& b) { return json_of(b).dump(2); }

std::string to_json(const BoundReport& r) {
    nlohmann::json j;
    j["class"] = class_label(r.cls);
    j["k"] = r.k;
    j["order"] = r.order;
    j["attained"] = to_decimal(r.attained);
    j["local_bound"] = json_of(r.local_bound);
    j["classical_bound_at_order"] = json_of(r.classical_bound_at_order);
    if (r.global) {
        j["global"] = {{"value", to_decimal(r.global->value)}, {"proven", r.global->proven}};
        j["pct_global"] = *r.pct_global;
    }
    j["pct_local"] = r.pct_local;
    if (r.ehlich)
        j["ehlich"] = {{"s", r.ehlich->s}, {"r", r.ehlich->r}, {"u", r.ehlich->u}, {"v", r.ehlich->v}};
    return j.dump(2);
}

std::string to_text(const BoundReport& r) {
    std::ostringstream out;
    out << "class " << class_label(r.cls) << "(k=" << r.k << "), order " << r.order << "\n";
    out << "attained        " << to_decimal(r.attained) << "\n";
    out << "local bound     ";
    if (r.local_bound.exact) out << to_decimal(*r.local_bound.exact);
    else out << static_cast<double>(r.local_bound.approx);
    out << "\n";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", r.pct_local);
    out << "pct local       " << buf << "\n";
    if (r.global) {
        out << "global (order " << r.order << ") " << to_decimal(r.global->value)
            << (r.global->proven ? "" : " (reported, unproven)") << "\n";
        std::snprintf(buf, sizeof(buf), "%.2f", *r.pct_global);
        out << "pct global      " << buf << "\n";
    }
    if (r.ehlich)
        out << "ehlich (s,r,u,v) = (" << r.ehlich->s << "," << r.ehlich->r << "," << r.ehlich->u
            << "," << r.ehlich->v << ")\n";
    return out.str();
}

} // namespace dopt
