// Exercises the shared-library C surface exactly as an embedder would: only
// dgcalc.h, no C++ core headers.

#include "dgcalc.h"

#include <cstdio>
#include <cstring>
#include <string>

static int failures = 0;

#define REQUIRE_TRUE(cond)                                                    \
    do {                                                                      \
        if (!(cond)) {                                                        \
            std::printf("[capi FAIL] %s:%d: %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                                       \
        }                                                                     \
    } while (0)

int main() {
    REQUIRE_TRUE(std::strlen(dgc_version()) > 0);

    // load / check / serialize / reload
    char* err = nullptr;
    dgc_algebra* a = dgc_algebra_load("preset:moore(3,2)", &err);
    REQUIRE_TRUE(a != nullptr);
    REQUIRE_TRUE(err == nullptr);
    REQUIRE_TRUE(dgc_algebra_check(a, &err) == DGC_OK);

    char* json = dgc_algebra_to_json(a);
    REQUIRE_TRUE(json != nullptr);
    dgc_algebra* b = dgc_algebra_from_json(json, &err);
    REQUIRE_TRUE(b != nullptr);
    char* json2 = dgc_algebra_to_json(b);
    REQUIRE_TRUE(json2 != nullptr && std::strcmp(json, json2) == 0);
    dgc_string_free(json);
    dgc_string_free(json2);

    // reduction and a table
    dgc_algebra* m3 = dgc_algebra_reduce(a, 3, 1, &err);
    REQUIRE_TRUE(m3 != nullptr);
    char* csv = nullptr;
    REQUIRE_TRUE(dgc_space_betti_csv(m3, 3, &csv, &err) == DGC_OK);
    REQUIRE_TRUE(csv != nullptr &&
                 std::string(csv) == "degree,dimension\n0,1\n1,0\n2,1\n3,1\n");
    dgc_string_free(csv);

    // error paths carry messages and the advertised codes
    dgc_algebra* bad = dgc_algebra_load("preset:banana(2)", &err);
    REQUIRE_TRUE(bad == nullptr);
    REQUIRE_TRUE(err != nullptr);
    dgc_string_free(err);
    err = nullptr;

    REQUIRE_TRUE(dgc_space_betti_csv(a, 3, &csv, &err) == DGC_ERR_INPUT);  // Z coefficients
    REQUIRE_TRUE(err != nullptr);
    dgc_string_free(err);
    err = nullptr;

    // orchestrated run: the Fibonacci loop table
    const char* spec =
        "{\"source\":\"preset:moore(3,2)\",\"prime\":3,\"ring_mode\":\"fp\","
        "\"max_degree\":9,\"target\":\"loop\",\"format\":\"csv\"}";
    char* text = nullptr;
    char* report = nullptr;
    int rc = dgc_run_job_json(spec, &text, &report, &err);
    REQUIRE_TRUE(rc == DGC_OK);
    REQUIRE_TRUE(text != nullptr &&
                 std::string(text).rfind("degree,dimension\n0,1\n1,1\n2,2\n3,3\n4,5\n", 0) == 0);
    REQUIRE_TRUE(report != nullptr && std::string(report).find("\"running_max\"") !=
                                          std::string::npos);
    dgc_string_free(text);
    dgc_string_free(report);

    // window violations surface as DGC_ERR_WINDOW
    const char* spec2 =
        "{\"source\":\"preset:sphere(3)\",\"prime\":3,\"ring_mode\":\"fp\","
        "\"max_degree\":40,\"target\":\"space\"}";
    rc = dgc_run_job_json(spec2, &text, nullptr, &err);
    REQUIRE_TRUE(rc == DGC_OK);
    dgc_string_free(text);

    const char* spec3 = "{\"source\":\"simplicial:builtin:rp2\",\"prime\":2,"
                        "\"target\":\"loop\",\"max_degree\":5}";
    rc = dgc_run_job_json(spec3, &text, nullptr, &err);
    REQUIRE_TRUE(rc == DGC_ERR_INPUT);
    if (err != nullptr) dgc_string_free(err);
    err = nullptr;
    dgc_string_free(text);

    dgc_algebra_free(m3);
    dgc_algebra_free(b);
    dgc_algebra_free(a);

    if (failures == 0) {
        std::printf("capi tests: all passed\n");
        return 0;
    }
    std::printf("capi tests: %d failure(s)\n", failures);
    return 1;
}
