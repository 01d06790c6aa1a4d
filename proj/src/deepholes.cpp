#include "prs/deepholes.hpp"

#include <algorithm>
#include <set>

namespace prs {

std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        default: return "unclassified";
    }
}

namespace {

void require_family_params(const PRSCode& code, unsigned rho) {
    std::uint64_t q = code.field->order();
    if (code.k < 2 || code.k > q - 3)
        throw std::invalid_argument("closed-form families need 2 <= k <= q-3");
    if (rho != q - code.k)
        throw std::invalid_argument("closed-form families require rho(PRS(k)) = q-k");
}

DeepHoleClass finish_class(const PRSCode& code, Word word, std::vector<felem> closed_syndrome,
                           Family fam, unsigned rho, bool validate) {
    const Field& F = *code.field;
    std::vector<felem> direct = syndrome(code, word);
    ProjPoint sp(F, std::move(closed_syndrome));
    if (!(ProjPoint(F, direct) == sp))
        throw CheckFailure("closed-form syndrome disagrees with parity-check syndrome");
    if (validate && error_distance(code, word) != rho)
        throw CheckFailure("family word is not a deep hole");
    DeepHoleClass cls;
    cls.k = code.k;
    cls.syndrome = sp;
    cls.genpoly = syndrome_to_genpoly(code, sp);
    cls.family = fam;
    cls.word = std::move(word);
    cls.orbit_label = family_name(fam);
    return cls;
}

}  // namespace

DeepHoleClass family_A(const PRSCode& code, felem a, unsigned rho, bool validate) {
    require_family_params(code, rho);
    const Field& F = *code.field;
    std::uint64_t q = F.order();
    Word w(std::size_t(q + 1));
    for (std::uint64_t j = 0; j < q; ++j) w[j] = F.pow(felem(j), code.k);
    w[q] = a;
    std::vector<felem> s(code.redundancy(), 0);
    s[s.size() - 2] = 1;
    s[s.size() - 1] = F.neg(a);
    DeepHoleClass cls = finish_class(code, std::move(w), std::move(s), Family::A, rho, validate);
    cls.a_param = a;
    return cls;
}

DeepHoleClass family_B(const PRSCode& code, unsigned i, felem a, unsigned rho,
                       bool validate) {
    require_family_params(code, rho);
    const Field& F = *code.field;
    std::uint64_t q = F.order();
    if (i < 1 || i > q) throw std::invalid_argument("family B index out of range");
    felem ai = felem(i - 1);
    Word w(std::size_t(q + 1), 0);
    for (std::uint64_t l = 0; l < q; ++l)
        w[l] = (l == i - 1) ? a : F.inv(F.sub(felem(l), ai));
    unsigned m = code.redundancy();
    std::vector<felem> ca = c_vector(F, m, ExtendedValue::of(ai));
    std::vector<felem> cp = c_prime_vector(F, m, ExtendedValue::of(ai));
    std::vector<felem> s(m);
    for (unsigned j = 0; j < m; ++j) s[j] = F.sub(F.mul(a, ca[j]), cp[j]);
    DeepHoleClass cls = finish_class(code, std::move(w), std::move(s), Family::B, rho, validate);
    cls.a_param = a;
    cls.index_param = i;
    return cls;
}

namespace {

// mu_a c_m(mu) + sigma(mu_a c_m(mu)) computed in the quadratic extension,
// asserted F_q-rational coordinatewise.
std::vector<felem> conjugate_pair_syndrome(const PRSCode& code, const QuadExt& E,
                                           QuadExt::xelem mu, QuadExt::xelem mu_a) {
    const Field& F = *code.field;
    unsigned m = code.redundancy();
    std::vector<felem> s(m);
    QuadExt::xelem pw = 1;
    for (unsigned j = 0; j < m; ++j) {
        QuadExt::xelem term = E.mul(mu_a, pw);
        QuadExt::xelem val = E.add(term, E.frobenius(term));
        if (!E.in_base(val)) throw CheckFailure("conjugate syndrome not rational");
        s[j] = E.to_base(val);
        pw = E.mul(pw, mu);
    }
    (void)F;
    return s;
}

}  // namespace

DeepHoleClass family_C(const PRSCode& code, ExtendedValue a, const Poly& quadratic,
                       const QuadExt& ext, unsigned rho, bool validate) {
    require_family_params(code, rho);
    const Field& F = *code.field;
    std::uint64_t q = F.order();
    QuadExt::xelem mu = ext.designated_root(quadratic);
    QuadExt::xelem mu_a = a.is_infinity ? 1 : ext.add(mu, ext.embed(a.value));
    Word w(std::size_t(q + 1), 0);
    for (std::uint64_t l = 0; l < q; ++l) {
        felem denom = quadratic.eval(felem(l));  // nonzero: p is irreducible
        felem num = a.is_infinity ? 1 : F.add(felem(l), a.value);
        w[l] = F.div(num, denom);
    }
    std::vector<felem> s = conjugate_pair_syndrome(code, ext, mu, mu_a);
    DeepHoleClass cls = finish_class(code, std::move(w), std::move(s), Family::C, rho, validate);
    cls.frac_shift = a;
    cls.quadratic = quadratic;
    return cls;
}

std::vector<ProjPoint> family_A_syndromes(const PRSCode& code) {
    const Field& F = *code.field;
    std::vector<ProjPoint> out;
    for (felem a = 0; a < F.order(); ++a) {
        std::vector<felem> s(code.redundancy(), 0);
        s[s.size() - 2] = 1;
        s[s.size() - 1] = F.neg(a);
        out.emplace_back(F, std::move(s));
    }
    return out;
}

std::vector<ProjPoint> family_B_syndromes(const PRSCode& code) {
    const Field& F = *code.field;
    unsigned m = code.redundancy();
    std::vector<ProjPoint> out;
    for (felem ai = 0; ai < F.order(); ++ai) {
        std::vector<felem> ca = c_vector(F, m, ExtendedValue::of(ai));
        std::vector<felem> cp = c_prime_vector(F, m, ExtendedValue::of(ai));
        for (felem a = 0; a < F.order(); ++a) {
            std::vector<felem> s(m);
            for (unsigned j = 0; j < m; ++j) s[j] = F.sub(F.mul(a, ca[j]), cp[j]);
            out.emplace_back(F, std::move(s));
        }
    }
    return out;
}

std::vector<ProjPoint> family_C_syndromes(const PRSCode& code, const QuadExt& ext) {
    const Field& F = *code.field;
    std::vector<ProjPoint> out;
    for (const Poly& p : monic_irreducible_quadratics(F)) {
        QuadExt::xelem mu = ext.designated_root(p);
        for (std::uint64_t a = 0; a <= F.order(); ++a) {
            ExtendedValue av = (a == F.order()) ? ExtendedValue::infinity()
                                                : ExtendedValue::of(felem(a));
            QuadExt::xelem mu_a = av.is_infinity ? 1 : ext.add(mu, ext.embed(av.value));
            out.emplace_back(F, conjugate_pair_syndrome(code, ext, mu, mu_a));
        }
    }
    return out;
}

std::vector<DeepHoleClass> enumerate_deep_holes(const PRSCode& code, unsigned rho,
                                                std::uint64_t max_points, unsigned threads) {
    const Field& F = *code.field;
    std::uint64_t q = F.order();
    if (!code.H) throw std::invalid_argument("PRS(q+1) has no deep holes to enumerate");
    if (rho < 1) throw std::invalid_argument("covering radius must be positive");

    // closed-form tags, when they apply
    std::map<ProjPoint, Family> tags;
    if (code.k >= 2 && code.k <= q - 3 && rho == q - code.k) {
        for (auto& s : family_A_syndromes(code)) tags.emplace(s, Family::A);
        for (auto& s : family_B_syndromes(code)) tags.emplace(s, Family::B);
        QuadExt ext(F);
        for (auto& s : family_C_syndromes(code, ext)) tags.emplace(s, Family::C);
    }

    std::vector<ProjPoint> pts =
        enumerate_projective_points(F, unsigned(q - code.k), max_points);
    const Matrix& H = *code.H;
    std::vector<std::vector<std::size_t>> found = run_partitioned<std::vector<std::size_t>>(
        pts.size(), threads, [&](std::size_t lo, std::size_t hi) {
            std::vector<std::size_t> idx;
            for (std::size_t i = lo; i < hi; ++i)
                if (!min_support_combination(pts[i].c, H, rho - 1)) idx.push_back(i);
            return idx;
        });

    std::vector<DeepHoleClass> out;
    for (const auto& chunk : found)
        for (std::size_t i : chunk) {
            DeepHoleClass cls;
            cls.k = code.k;
            cls.syndrome = pts[i];
            cls.genpoly = syndrome_to_genpoly(code, cls.syndrome);
            auto it = tags.find(cls.syndrome);
            cls.family = (it != tags.end()) ? it->second : Family::Unclassified;
            cls.orbit_label = family_name(cls.family);
            cls.word = genpoly_word(code, cls.genpoly);
            out.push_back(std::move(cls));
        }
    return out;
}

ClassificationReport classify_q_minus_3(const Field& F, std::uint64_t max_points,
                                        unsigned threads, bool include_orbits) {
    std::uint64_t q = F.order();
    if (q < 5) throw std::invalid_argument("classification needs q >= 5");
    unsigned k = unsigned(q - 3);

    ClassificationReport rep;
    rep.q = q;
    rep.k = k;
    rep.expected_total = (q * q * q + 2 * q * q + q) / 2;

    PRSCode code = make_code(F, k);
    rep.rho = covering_radius(code, max_points, threads).rho;
    if (rep.rho != 3) {
        rep.failures.push_back("covering radius is not 3");
        return rep;
    }

    std::map<ProjPoint, DeepHoleClass> by_syndrome;
    bool disjoint = true;
    auto insert = [&](DeepHoleClass cls) {
        auto [it, fresh] = by_syndrome.emplace(cls.syndrome, std::move(cls));
        (void)it;
        if (!fresh) disjoint = false;
    };

    for (felem a = 0; a < q; ++a) insert(family_A(code, a, rep.rho));
    rep.count_A = q;
    for (unsigned i = 1; i <= q; ++i)
        for (felem a = 0; a < q; ++a) insert(family_B(code, i, a, rep.rho));
    rep.count_B = q * q;
    QuadExt ext(F);
    for (const Poly& p : monic_irreducible_quadratics(F))
        for (std::uint64_t a = 0; a <= q; ++a) {
            ExtendedValue av = (a == q) ? ExtendedValue::infinity()
                                        : ExtendedValue::of(felem(a));
            insert(family_C(code, av, p, ext, rep.rho));
        }
    rep.count_C = (q + 1) * q * (q - 1) / 2;

    rep.families_disjoint = disjoint && by_syndrome.size() == rep.expected_total;
    if (!rep.families_disjoint) rep.failures.push_back("families are not pairwise disjoint");

    std::vector<DeepHoleClass> enumerated =
        enumerate_deep_holes(code, rep.rho, max_points, threads);
    rep.enumerated = enumerated.size();
    rep.count_matches_formula = rep.enumerated == rep.expected_total;
    if (!rep.count_matches_formula)
        rep.failures.push_back("enumerated count disagrees with the counting formula");

    bool match = enumerated.size() == by_syndrome.size();
    for (const DeepHoleClass& cls : enumerated)
        if (!by_syndrome.count(cls.syndrome)) { match = false; break; }
    rep.families_match_enumeration = match;
    if (!match) rep.failures.push_back("families do not cover the enumerated deep holes");

    for (auto& [s, cls] : by_syndrome) rep.classes.push_back(cls);

    if (include_orbits) {
        OrbitSummary summary;
        std::set<ProjPoint> ab, cset;
        for (const auto& cls : rep.classes)
            (cls.family == Family::C ? cset : ab).insert(cls.syndrome);
        std::set<ProjPoint> unassigned = ab;
        unsigned m = code.redundancy();
        while (!unassigned.empty()) {
            OrbitResult res = orbit(*unassigned.begin(), m);
            summary.ab_orbit_sizes.push_back(res.orbit.size());
            std::string label = "AB-" + std::to_string(summary.ab_orbit_sizes.size() - 1);
            for (const ProjPoint& p : res.orbit) {
                unassigned.erase(p);
                auto it = by_syndrome.find(p);
                if (it != by_syndrome.end()) it->second.orbit_label = label;
            }
        }
        summary.c_set_stable = true;
        for (const Mobius& g : enumerate_pgl2(F)) {
            Matrix gm = rep_matrix(g, m);
            for (const ProjPoint& p : cset) {
                ProjPoint img(F, matvec(gm, p.c));
                if (!cset.count(img)) { summary.c_set_stable = false; break; }
            }
            if (!summary.c_set_stable) break;
        }
        if (!summary.c_set_stable)
            rep.failures.push_back("family C syndromes are not PGL2-stable");
        rep.classes.clear();
        for (auto& [s, cls] : by_syndrome) rep.classes.push_back(cls);
        rep.orbits = std::move(summary);
    }
    return rep;
}

GeometryReport tangent_secant_geometry(const Field& F, unsigned k) {
    std::uint64_t q = F.order();
    if (k < 2 || k > q - 3) throw std::invalid_argument("geometry needs 2 <= k <= q-3");
    unsigned m = unsigned(q + 1 - k);
    PRSCode code = make_code(F, k);

    GeometryReport rep;
    rep.k = k;

    // tangent lines: base c_m(t), direction c'_m(t) (N_m at infinity)
    std::set<ProjPoint> curve, off_curve;
    std::vector<std::set<ProjPoint>> lines;
    for (std::uint64_t t = 0; t <= q; ++t) {
        ExtendedValue tv = (t == q) ? ExtendedValue::infinity() : ExtendedValue::of(felem(t));
        std::vector<felem> base = c_vector(F, m, tv);
        std::vector<felem> dir = tv.is_infinity ? n_point(F, m).c
                                                : c_prime_vector(F, m, tv);
        std::set<ProjPoint> line;
        line.emplace(F, base);
        curve.emplace(F, base);
        for (felem a = 0; a < q; ++a) {
            std::vector<felem> p(m);
            for (unsigned j = 0; j < m; ++j) p[j] = F.sub(dir[j], F.mul(a, base[j]));
            ProjPoint pt(F, std::move(p));
            off_curve.insert(pt);
            line.insert(std::move(pt));
        }
        lines.push_back(std::move(line));
    }
    rep.tangent_lines_pairwise_disjoint = true;
    for (std::size_t i = 0; i < lines.size() && rep.tangent_lines_pairwise_disjoint; ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            std::vector<ProjPoint> common;
            std::set_intersection(lines[i].begin(), lines[i].end(), lines[j].begin(),
                                  lines[j].end(), std::back_inserter(common));
            if (!common.empty()) { rep.tangent_lines_pairwise_disjoint = false; break; }
        }
    if (!rep.tangent_lines_pairwise_disjoint)
        rep.failures.push_back("tangent lines intersect");

    rep.tangent_off_curve_points = off_curve.size();
    std::set<ProjPoint> ab;
    for (auto& s : family_A_syndromes(code)) ab.insert(s);
    for (auto& s : family_B_syndromes(code)) ab.insert(s);
    rep.tangent_points_match_AB = (off_curve == ab);
    if (!rep.tangent_points_match_AB)
        rep.failures.push_back("off-curve tangent points differ from A u B syndromes");

    // conjugate secants over the quadratic extension
    QuadExt E(F);
    std::set<ProjPoint> secant_rational;
    for (const Poly& p : monic_irreducible_quadratics(F)) {
        QuadExt::xelem mu = E.designated_root(p);
        QuadExt::xelem nu = E.frobenius(mu);
        std::vector<QuadExt::xelem> cmu(m), cnu(m);
        QuadExt::xelem p1 = 1, p2 = 1;
        for (unsigned j = 0; j < m; ++j) {
            cmu[j] = p1; cnu[j] = p2;
            p1 = E.mul(p1, mu); p2 = E.mul(p2, nu);
        }
        auto try_point = [&](const std::vector<QuadExt::xelem>& v) {
            std::size_t nz = 0;
            while (nz < v.size() && v[nz] == 0) ++nz;
            QuadExt::xelem inv = E.inv(v[nz]);
            std::vector<felem> coords(m);
            for (unsigned j = 0; j < m; ++j) {
                QuadExt::xelem x = E.mul(v[j], inv);
                if (!E.in_base(x)) return;
                coords[j] = E.to_base(x);
            }
            secant_rational.emplace(F, std::move(coords));
        };
        try_point(cmu);
        for (QuadExt::xelem lam = 0; lam < E.order(); ++lam) {
            std::vector<QuadExt::xelem> v(m);
            for (unsigned j = 0; j < m; ++j) v[j] = E.add(cnu[j], E.mul(lam, cmu[j]));
            try_point(v);
        }
    }
    rep.secant_rational_points = secant_rational.size();
    std::set<ProjPoint> cset;
    for (auto& s : family_C_syndromes(code, E)) cset.insert(s);
    rep.secant_points_match_C = (secant_rational == cset);
    if (!rep.secant_points_match_C)
        rep.failures.push_back("secant rational points differ from family C syndromes");
    return rep;
}

}  // namespace prs
