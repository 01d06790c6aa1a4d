#include "prs.h"

#include <cstring>
#include <string>

#include "prs/report.hpp"

using namespace prs;

struct prs_field {
    Field field;
};

struct prs_code {
    const prs_field* owner;
    PRSCode code;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

ReportFormat to_format(prs_format fmt) {
    switch (fmt) {
        case PRS_FORMAT_JSON: return ReportFormat::Jsonish;
        case PRS_FORMAT_CSV: return ReportFormat::Csv;
        default: return ReportFormat::Text;
    }
}

prs_options resolved(const prs_options* opts) {
    prs_options o{0, 0};
    if (opts) o = *opts;
    if (o.max_points == 0) o.max_points = kDefaultPointBound;
    if (o.threads == 0) o.threads = 1;
    return o;
}

template <class Fn>
prs_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const BoundExceeded& e) {
        g_last_error = e.what();
        return PRS_ERR_BOUND;
    } catch (const CheckFailure& e) {
        g_last_error = e.what();
        return PRS_ERR_CHECK;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return PRS_ERR_USAGE;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return PRS_ERR_CHECK;
    }
}

}  // namespace

extern "C" {

const char* prs_version(void) { return kVersion; }

const char* prs_last_error(void) { return g_last_error.c_str(); }

void prs_string_free(char* s) { delete[] s; }

prs_status prs_field_create(long p, int m, prs_field** out) {
    return guarded([&] {
        if (!out || p <= 0 || m <= 0) throw std::invalid_argument("bad field parameters");
        *out = new prs_field{Field(std::uint64_t(p), unsigned(m))};
        return PRS_OK;
    });
}

void prs_field_destroy(prs_field* f) { delete f; }

long prs_field_order(const prs_field* f) { return f ? long(f->field.order()) : 0; }

prs_status prs_field_info(const prs_field* f, prs_format fmt, char** report) {
    return guarded([&] {
        if (!f || !report) throw std::invalid_argument("null argument");
        *report = dup_string(render(field_info_report(f->field), to_format(fmt)));
        return PRS_OK;
    });
}

prs_status prs_code_create(const prs_field* f, int k, prs_code** out) {
    return guarded([&] {
        if (!f || !out) throw std::invalid_argument("null argument");
        if (k < 1) throw std::invalid_argument("dimension k out of range");
        *out = new prs_code{f, make_code(f->field, unsigned(k))};
        return PRS_OK;
    });
}

void prs_code_destroy(prs_code* c) { delete c; }

prs_status prs_code_info(const prs_code* c, prs_format fmt, char** report) {
    return guarded([&] {
        if (!c || !report) throw std::invalid_argument("null argument");
        *report = dup_string(render(code_info_report(c->code), to_format(fmt)));
        return PRS_OK;
    });
}

namespace {

Word to_word(const prs_code* c, const long* word, size_t word_len) {
    if (!word || word_len != c->code.length())
        throw std::invalid_argument("word length must be q+1");
    Word w(word_len);
    for (size_t i = 0; i < word_len; ++i) {
        if (word[i] < 0 || std::uint64_t(word[i]) >= c->code.field->order())
            throw std::invalid_argument("word entry out of range");
        w[i] = felem(word[i]);
    }
    return w;
}

}  // namespace

prs_status prs_code_syndrome(const prs_code* c, const long* word, size_t word_len,
                             long* syn, size_t syn_len) {
    return guarded([&] {
        if (!c || !syn) throw std::invalid_argument("null argument");
        std::vector<felem> s = syndrome(c->code, to_word(c, word, word_len));
        if (syn_len < s.size()) throw std::invalid_argument("syndrome buffer too small");
        for (size_t i = 0; i < s.size(); ++i) syn[i] = long(s[i]);
        return PRS_OK;
    });
}

prs_status prs_code_error_distance(const prs_code* c, const long* word, size_t word_len,
                                   int* distance) {
    return guarded([&] {
        if (!c || !distance) throw std::invalid_argument("null argument");
        *distance = int(error_distance(c->code, to_word(c, word, word_len)));
        return PRS_OK;
    });
}

prs_status prs_covering_radius(const prs_field* f, int k, const prs_options* opts,
                               prs_format fmt, int* rho, char** report) {
    return guarded([&] {
        if (!f) throw std::invalid_argument("null argument");
        prs_options o = resolved(opts);
        PRSCode code = make_code(f->field, unsigned(k));
        CoveringRadiusResult r = covering_radius(code, o.max_points, o.threads);
        if (rho) *rho = int(r.rho);
        if (report)
            *report = dup_string(render(covering_radius_report(f->field, code, r), to_format(fmt)));
        return PRS_OK;
    });
}

prs_status prs_deep_holes(const prs_field* f, int k, const char* mode,
                          const prs_options* opts, prs_format fmt, char** report) {
    return guarded([&] {
        if (!f || !mode || !report) throw std::invalid_argument("null argument");
        const Field& F = f->field;
        std::uint64_t q = F.order();
        prs_options o = resolved(opts);
        std::string m(mode);

        if (m == "classify" || m == "orbits") {
            if (q < 5 || unsigned(k) != q - 3)
                throw std::invalid_argument("classification requires k = q-3 with q >= 5");
            ClassificationReport rep =
                classify_q_minus_3(F, o.max_points, o.threads, m == "orbits");
            *report = dup_string(render(classification_report(F, rep), to_format(fmt)));
            return rep.ok() ? PRS_OK : PRS_ERR_CHECK;
        }

        PRSCode code = make_code(F, unsigned(k));
        if (m == "enumerate") {
            CoveringRadiusResult r = covering_radius(code, o.max_points, o.threads);
            std::vector<DeepHoleClass> classes =
                enumerate_deep_holes(code, r.rho, o.max_points, o.threads);
            *report = dup_string(render(
                deep_holes_enumerate_report(F, code, r.rho, r.by_special_case, classes),
                to_format(fmt)));
            return PRS_OK;
        }
        if (m == "families") {
            // Use the known/computed covering radius when feasible; fall back
            // to the conjectured value and flag the report as conditional.
            unsigned rho;
            bool conditional = false;
            try {
                rho = covering_radius(code, o.max_points, o.threads).rho;
            } catch (const BoundExceeded&) {
                rho = conjectured_covering_radius(F, unsigned(k));
                conditional = true;
            }
            // Per-word deep-hole validation needs the true covering radius.
            bool validate = !conditional;
            std::vector<DeepHoleClass> classes;
            for (felem a = 0; a < q; ++a)
                classes.push_back(family_A(code, a, rho, validate));
            for (unsigned i = 1; i <= q; ++i)
                for (felem a = 0; a < q; ++a)
                    classes.push_back(family_B(code, i, a, rho, validate));
            QuadExt ext(F);
            for (const Poly& p : monic_irreducible_quadratics(F))
                for (std::uint64_t a = 0; a <= q; ++a) {
                    ExtendedValue av = (a == q) ? ExtendedValue::infinity()
                                                : ExtendedValue::of(felem(a));
                    classes.push_back(family_C(code, av, p, ext, rho, validate));
                }
            *report = dup_string(render(
                deep_holes_families_report(F, code, rho, conditional, classes), to_format(fmt)));
            return PRS_OK;
        }
        throw std::invalid_argument("unknown deep-holes mode: " + m);
    });
}

prs_status prs_orbit(const prs_field* f, int m, const long* point, size_t point_len,
                     prs_format fmt, char** report) {
    return guarded([&] {
        if (!f || !report) throw std::invalid_argument("null argument");
        if (m < 3) throw std::invalid_argument("orbit dimension m must be >= 3");
        const Field& F = f->field;
        ProjPoint pt;
        if (point) {
            if (point_len != size_t(m)) throw std::invalid_argument("point length must be m");
            std::vector<felem> c(point_len);
            for (size_t i = 0; i < point_len; ++i) {
                if (point[i] < 0 || std::uint64_t(point[i]) >= F.order())
                    throw std::invalid_argument("point entry out of range");
                c[i] = felem(point[i]);
            }
            pt = ProjPoint(F, std::move(c));
        } else {
            pt = n_point(F, unsigned(m));
        }
        OrbitResult res = orbit(pt, unsigned(m));
        *report = dup_string(render(orbit_report(F, unsigned(m), pt, res), to_format(fmt)));
        return PRS_OK;
    });
}

}  // extern "C"
