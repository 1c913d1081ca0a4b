// dgcalc command line front end: builds a job spec from flags and drives the
// shared-library C API.  Exit codes: 0 success, 2 input error, 3 invariant
// failure, 4 truncation-window violation.

#include "dgcalc.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
    CLI::App app{"dgcalc: exact bar/Hochschild/Kraines computations for DG algebras"};

    std::string source, ring = "fp", target = "space", format = "text", cache_dir, variant;
    long prime = 2;
    int eps = 1, max_degree = 10, coset_search = 0;

    app.add_option("--source", source,
                   "preset:NAME | simplicial:PATH | simplicial:builtin:NAME | dga:PATH")
        ->required();
    app.add_option("--prime", prime, "coefficient prime p")->capture_default_str();
    app.add_option("--ring", ring, "fp (F_p) | z (integers) | zpe (Z/p^eps)")
        ->check(CLI::IsMember({"fp", "z", "zpe"}))
        ->capture_default_str();
    app.add_option("--eps", eps, "exponent for --ring zpe")->capture_default_str();
    app.add_option("--max-degree", max_degree, "truncation degree N")->capture_default_str();
    app.add_option("--target", target, "space | loop | freeloop | kraines | check")
        ->check(CLI::IsMember({"space", "loop", "freeloop", "kraines", "check"}))
        ->capture_default_str();
    app.add_option("--format", format, "text | csv | json")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    app.add_option("--cache-dir", cache_dir, "cache directory (or env DGCALC_CACHE_DIR)");
    app.add_option("--variant", variant,
                   "mixed delta^{-1} sign variant override for kraines sessions");
    app.add_option("--coset-search", coset_search,
                   "bounded enumeration of alternative Kraines extensions")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (cache_dir.empty()) {
        const char* env = std::getenv("DGCALC_CACHE_DIR");
        if (env != nullptr) cache_dir = env;
    }

    nlohmann::ordered_json spec;
    spec["source"] = source;
    spec["prime"] = prime;
    spec["ring_mode"] = ring;
    spec["eps"] = eps;
    spec["max_degree"] = max_degree;
    spec["target"] = target;
    spec["format"] = format;
    spec["cache_dir"] = cache_dir;
    spec["variant"] = variant;
    spec["coset_search"] = coset_search;

    char* text = nullptr;
    char* err = nullptr;
    int rc = dgc_run_job_json(spec.dump().c_str(), &text, nullptr, &err);
    if (text != nullptr) {
        std::cout << text;
        dgc_string_free(text);
    }
    if (err != nullptr) {
        std::cerr << "dgcalc: " << err << "\n";
        dgc_string_free(err);
    }
    return rc;
}
