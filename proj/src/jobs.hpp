#pragma once

#include "io.hpp"

namespace dgc {

/* One orchestrated run: source -> (reduction) -> target computation ->
   formatted report.  Deterministic: identical specs produce byte-identical
   output. */
struct JobSpec {
    std::string source;     // preset:NAME | simplicial:PATH | simplicial:builtin:NAME | dga:PATH
    long prime = 2;
    std::string ring_mode = "fp";  // fp | z | zpe
    int eps = 1;                   // exponent for zpe
    int max_degree = 10;           // truncation N
    std::string target = "space";  // space | loop | freeloop | kraines | check
    std::string format = "text";   // text | csv | json
    std::string cache_dir;
    std::string variant;     // mixed delta^{-1} sign override for kraines
    int coset_search = 0;    // bounded alternative-solution enumeration

    Json to_json() const;
    static JobSpec from_json(const Json& j);
};

struct JobResult {
    int exit_code = 0;
    std::string text;  // rendered in the requested format
    Json report;
};

JobResult run_job(const JobSpec& spec);

// Source loading, shared with the C API: returns an algebra over Z when the
// source is integral, or over its native ring for DGA files.
DGAlgebra load_source(const std::string& source);

}  // namespace dgc
