#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

#include <json.hpp>

#include "prs.h"

using nlohmann::json;

namespace {

struct Str {
    char* s = nullptr;
    ~Str() { prs_string_free(s); }
    std::string get() const { return s ? std::string(s) : std::string(); }
};

}  // namespace

TEST_CASE("version and lifecycle") {
    CHECK(std::string(prs_version()) == "1.0.0");
    prs_field* f = nullptr;
    REQUIRE(prs_field_create(5, 1, &f) == PRS_OK);
    CHECK(prs_field_order(f) == 5);
    Str info;
    CHECK(prs_field_info(f, PRS_FORMAT_JSON, &info.s) == PRS_OK);
    json j = json::parse(info.get());
    CHECK(j["q"] == 5);
    CHECK(j["irreducible_quadratics"] == 10);
    prs_code* c = nullptr;
    REQUIRE(prs_code_create(f, 2, &c) == PRS_OK);
    Str cinfo;
    CHECK(prs_code_info(c, PRS_FORMAT_JSON, &cinfo.s) == PRS_OK);
    json cj = json::parse(cinfo.get());
    CHECK(cj["k"] == 2);
    CHECK(cj["length"] == 6);
    CHECK(cj["generator"].size() == 2);
    prs_code_destroy(c);
    prs_field_destroy(f);
}

TEST_CASE("error codes") {
    prs_field* f = nullptr;
    CHECK(prs_field_create(4, 1, &f) == PRS_ERR_USAGE);  // 4 is not prime
    CHECK(std::string(prs_last_error()).size() > 0);
    CHECK(prs_field_create(2, 40, &f) == PRS_ERR_BOUND);

    REQUIRE(prs_field_create(5, 1, &f) == PRS_OK);
    prs_code* c = nullptr;
    CHECK(prs_code_create(f, 9, &c) == PRS_ERR_USAGE);  // k > q+1
    Str rep;
    CHECK(prs_deep_holes(f, 2, "bogus", nullptr, PRS_FORMAT_TEXT, &rep.s) == PRS_ERR_USAGE);
    prs_options tiny{10, 1};
    Str rep2;
    CHECK(prs_covering_radius(f, 2, &tiny, PRS_FORMAT_TEXT, nullptr, &rep2.s) ==
          PRS_ERR_BOUND);
    prs_field_destroy(f);
}

TEST_CASE("syndrome and error distance") {
    prs_field* f = nullptr;
    REQUIRE(prs_field_create(5, 1, &f) == PRS_OK);
    prs_code* c = nullptr;
    REQUIRE(prs_code_create(f, 2, &c) == PRS_OK);
    // codeword of X + 1
    long w[6] = {1, 2, 3, 4, 0, 1};
    long syn[4] = {9, 9, 9, 9};
    REQUIRE(prs_code_syndrome(c, w, 6, syn, 4) == PRS_OK);
    for (long s : syn) CHECK(s == 0);
    int dist = -1;
    REQUIRE(prs_code_error_distance(c, w, 6, &dist) == PRS_OK);
    CHECK(dist == 0);
    long deep[6] = {0, 1, 4, 4, 1, 3};  // (alpha^2, ..., a=3)
    REQUIRE(prs_code_error_distance(c, deep, 6, &dist) == PRS_OK);
    CHECK(dist == 3);
    CHECK(prs_code_error_distance(c, w, 5, &dist) == PRS_ERR_USAGE);  // wrong length
    long bad[6] = {0, 0, 0, 0, 0, 7};
    CHECK(prs_code_error_distance(c, bad, 6, &dist) == PRS_ERR_USAGE);
    prs_code_destroy(c);
    prs_field_destroy(f);
}

TEST_CASE("covering radius") {
    prs_field* f = nullptr;
    REQUIRE(prs_field_create(7, 1, &f) == PRS_OK);
    int rho = -1;
    Str rep;
    REQUIRE(prs_covering_radius(f, 8, nullptr, PRS_FORMAT_JSON, &rho, &rep.s) == PRS_OK);
    CHECK(rho == 0);  // k = q+1
    REQUIRE(prs_covering_radius(f, 4, nullptr, PRS_FORMAT_JSON, &rho, nullptr) == PRS_OK);
    CHECK(rho == 3);
    prs_field_destroy(f);
}

TEST_CASE("deterministic reports") {
    prs_field* f = nullptr;
    REQUIRE(prs_field_create(5, 1, &f) == PRS_OK);
    prs_options opts{0, 3};
    Str r1, r2;
    REQUIRE(prs_deep_holes(f, 2, "classify", &opts, PRS_FORMAT_JSON, &r1.s) == PRS_OK);
    prs_options opts2{0, 1};  // thread count must not affect the bytes
    REQUIRE(prs_deep_holes(f, 2, "classify", &opts2, PRS_FORMAT_JSON, &r2.s) == PRS_OK);
    CHECK(r1.get() == r2.get());
    Str csv;
    REQUIRE(prs_deep_holes(f, 2, "classify", &opts, PRS_FORMAT_CSV, &csv.s) == PRS_OK);
    CHECK(csv.get().rfind("family,params,syndrome,genpoly,orbit", 0) == 0);
    prs_field_destroy(f);
}

TEST_CASE("emitted classes round-trip") {
    prs_field* f = nullptr;
    REQUIRE(prs_field_create(5, 1, &f) == PRS_OK);
    prs_code* c = nullptr;
    REQUIRE(prs_code_create(f, 2, &c) == PRS_OK);
    Str rep;
    REQUIRE(prs_deep_holes(f, 2, "classify", nullptr, PRS_FORMAT_JSON, &rep.s) == PRS_OK);
    json j = json::parse(rep.get());
    REQUIRE(j["ok"] == true);
    REQUIRE(j["classes"].size() == 90);
    int rho = j["rho"].get<int>();
    for (const auto& cls : j["classes"]) {
        // rebuild the generated word (g(0), ..., g(4), 0) over the prime field
        std::vector<long> gp = cls["genpoly"].get<std::vector<long>>();
        long w[6] = {0, 0, 0, 0, 0, 0};
        for (long x = 0; x < 5; ++x) {
            long v = 0, pw = 1;
            for (long coef : gp) {
                v = (v + coef * pw) % 5;
                pw = (pw * x) % 5;
            }
            w[x] = v;
        }
        int dist = -1;
        REQUIRE(prs_code_error_distance(c, w, 6, &dist) == PRS_OK);
        CHECK(dist == rho);  // still a deep hole after serialization
    }
    prs_code_destroy(c);
    prs_field_destroy(f);
}

TEST_CASE("orbit endpoint") {
    prs_field* f = nullptr;
    REQUIRE(prs_field_create(5, 1, &f) == PRS_OK);
    Str rep;
    REQUIRE(prs_orbit(f, 6, nullptr, 0, PRS_FORMAT_JSON, &rep.s) == PRS_OK);
    json j = json::parse(rep.get());
    CHECK(j["orbit_size"] == 6);
    CHECK(j["stabilizer_order"] == 20);
    CHECK(j["product_check"] == true);
    long pt[3] = {0, 1, 0};
    Str rep3;
    REQUIRE(prs_orbit(f, 3, pt, 3, PRS_FORMAT_JSON, &rep3.s) == PRS_OK);
    CHECK(json::parse(rep3.get())["orbit_size"] == 15);
    CHECK(prs_orbit(f, 3, pt, 2, PRS_FORMAT_TEXT, &rep3.s) == PRS_ERR_USAGE);
    prs_field_destroy(f);
}
