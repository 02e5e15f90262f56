#include "quintic/covariants.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>

#include "quintic/formparse.hpp"

namespace quintic {

namespace {

// bump when the construction below changes; stored in the cache header
constexpr const char* kTableVersion = "omega-literal-1";

const std::vector<std::string>& table_vars() {
    static const std::vector<std::string> v =
        standard_vars({"x", "y", "a0", "a1", "a2", "a3", "a4", "a5"});
    return v;
}

MultiPoly<ZZ> checked_divide(const MultiPoly<ZZ>& raw, long divisor, const std::string& name) {
    MultiPoly<ZZ> out(raw.ring, raw.vars);
    try {
        out = divexact_scalar(raw, mpz_class(divisor));
    } catch (const internal_error&) {
        throw construction_error("division by " + std::to_string(divisor) + " is not exact for " + name);
    }
    if (content(out) != 1)
        throw construction_error("content of " + name + " is not 1 after dividing by " +
                                 std::to_string(divisor));
    return out;
}

CovariantEntry make_entry(const std::string& name, int order, int degree, MultiPoly<ZZ> poly) {
    CovariantEntry e{name, order, degree, std::move(poly)};
    if (!e.poly.is_zero()) {
        auto od = homogeneous_degree(e.poly, {"x", "y"});
        auto dd = homogeneous_degree(e.poly, {"a0", "a1", "a2", "a3", "a4", "a5"});
        if (!od || *od != order)
            throw construction_error(name + ": wrong order (expected " + std::to_string(order) + ")");
        if (!dd || *dd != degree)
            throw construction_error(name + ": wrong degree (expected " + std::to_string(degree) + ")");
    }
    return e;
}

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace

CovariantTable build_universal_table() {
    ZZ zz;
    const auto& vars = table_vars();

    MultiPoly<ZZ> f(zz, vars);
    for (int t = 0; t <= 5; ++t) {
        Mono m(vars.size(), 0);
        m[0] = static_cast<uint32_t>(5 - t);  // x
        m[1] = static_cast<uint32_t>(t);      // y
        m[2 + t] = 1;                         // a_t
        f.terms.emplace(std::move(m), mpz_class(1));
    }
    BinaryForm<ZZ> F{5, f};

    auto tv = [](const BinaryForm<ZZ>& a, const BinaryForm<ZZ>& b, int m) {
        return transvectant(a, b, m);
    };

    BinaryForm<ZZ> i{2, checked_divide(tv(F, F, 4).poly, 288, "i")};
    BinaryForm<ZZ> H{6, checked_divide(tv(F, F, 2).poly, 16, "H")};
    BinaryForm<ZZ> j{3, -checked_divide(tv(F, i, 2).poly, 12, "j")};
    BinaryForm<ZZ> A{0, checked_divide(tv(i, i, 2).poly, 32, "A")};
    BinaryForm<ZZ> k{4, checked_divide(tv(i, H, 2).poly, 12, "k")};
    BinaryForm<ZZ> tau{2, checked_divide(tv(j, j, 2).poly, 16, "tau")};
    BinaryForm<ZZ> B{0, checked_divide(tv(tau, i, 2).poly, 8, "B")};
    auto Delta = checked_divide(A.poly * A.poly - mul_scalar(B.poly, mpz_class(4)), 125, "Delta");
    BinaryForm<ZZ> C{0, checked_divide(tv(tau, tau, 2).poly, 6, "C")};
    auto M = checked_divide(mul_scalar(C.poly, mpz_class(-9)) +
                                mul_scalar(A.poly * Delta, mpz_class(2000)) +
                                mul_scalar(A.poly * A.poly * A.poly, mpz_class(1008)),
                            25, "M");

    CovariantTable t;
    t.entries.push_back(make_entry("f", 5, 1, f));
    t.entries.push_back(make_entry("i", 2, 2, i.poly));
    t.entries.push_back(make_entry("H", 6, 2, H.poly));
    t.entries.push_back(make_entry("j", 3, 3, j.poly));
    t.entries.push_back(make_entry("k", 4, 4, k.poly));
    t.entries.push_back(make_entry("tau", 2, 6, tau.poly));
    t.entries.push_back(make_entry("A", 0, 4, A.poly));
    t.entries.push_back(make_entry("B", 0, 8, B.poly));
    t.entries.push_back(make_entry("Delta", 0, 8, Delta));
    t.entries.push_back(make_entry("C", 0, 12, C.poly));
    t.entries.push_back(make_entry("M", 0, 12, M));
    return t;
}

std::string table_to_text(const CovariantTable& t) {
    std::ostringstream body;
    for (const auto& e : t.entries)
        body << e.name << " " << e.order << " " << e.degree << "\n" << format_poly(e.poly) << "\n";
    std::ostringstream out;
    out << "quintic-covariant-table " << kTableVersion << " " << fnv1a(body.str()) << "\n"
        << body.str();
    return out.str();
}

CovariantTable table_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string magic, version;
    uint64_t hash = 0;
    if (!(in >> magic >> version >> hash) || magic != "quintic-covariant-table")
        throw construction_error("not a covariant table cache");
    if (version != kTableVersion) throw construction_error("cache version mismatch");
    std::string rest;
    {
        std::string line;
        std::getline(in, line);  // end of header line
        std::ostringstream body;
        while (std::getline(in, line)) body << line << "\n";
        rest = body.str();
    }
    if (fnv1a(rest) != hash) throw construction_error("cache hash mismatch");

    ZZ zz;
    CovariantTable t;
    std::istringstream entries(rest);
    std::string name;
    int order = 0, degree = 0;
    while (entries >> name >> order >> degree) {
        std::string line;
        std::getline(entries, line);
        if (!std::getline(entries, line)) throw construction_error("truncated cache");
        t.entries.push_back(make_entry(name, order, degree, parse_poly(line, zz, table_vars())));
    }
    if (t.entries.size() != 11) throw construction_error("cache entry count mismatch");
    return t;
}

const CovariantTable& universal_table() {
    static const CovariantTable table = [] {
        const char* path = std::getenv("QUINTIC_TABLE_CACHE");
        if (path != nullptr) {
            std::ifstream in(path);
            if (in) {
                std::ostringstream buf;
                buf << in.rdbuf();
                try {
                    return table_from_text(buf.str());
                } catch (const construction_error&) {
                    // stale or foreign cache: rebuild below
                }
            }
        }
        CovariantTable t = build_universal_table();
        if (path != nullptr) {
            std::ofstream out(path);
            if (out) out << table_to_text(t);
        }
        return t;
    }();
    return table;
}

const mpz_class& discriminant_to_delta_ratio() {
    static const mpz_class ratio = [] {
        const auto& T = universal_table();
        auto fx = substitute_values(T.entry("f").poly, {{"y", mpz_class(1)}});
        auto dsc = discriminant(fx, "x");
        auto quot = divexact_poly(dsc, T.entry("Delta").poly);
        if (!quot.is_constant())
            throw internal_error("disc(f)/Delta is not a constant");
        return quot.constant_value();
    }();
    return ratio;
}

}  // namespace quintic
