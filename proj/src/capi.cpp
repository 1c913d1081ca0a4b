#include "dgcalc.h"

#include "jobs.hpp"

#include <cstdlib>
#include <cstring>
#include <new>

using namespace dgc;

struct dgc_algebra {
    DGAlgebra value;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_err(char** err, const std::string& msg) {
    if (err != nullptr) *err = dup_string(msg);
}

int code_of(const error& e) { return static_cast<int>(e.code); }

template <typename F>
int guarded(char** err, F&& f) {
    try {
        f();
        return DGC_OK;
    } catch (const error& e) {
        set_err(err, e.what());
        return code_of(e);
    } catch (const std::exception& e) {
        set_err(err, e.what());
        return DGC_ERR_INPUT;
    }
}

}  // namespace

extern "C" {

const char* dgc_version(void) { return "dgcalc 1.0.0"; }

void dgc_string_free(char* s) { std::free(s); }

dgc_algebra* dgc_algebra_load(const char* source, char** err) {
    if (source == nullptr) {
        set_err(err, "null source");
        return nullptr;
    }
    dgc_algebra* out = nullptr;
    guarded(err, [&] { out = new dgc_algebra{load_source(source)}; });
    return out;
}

dgc_algebra* dgc_algebra_from_json(const char* json_text, char** err) {
    if (json_text == nullptr) {
        set_err(err, "null json");
        return nullptr;
    }
    dgc_algebra* out = nullptr;
    guarded(err, [&] {
        Json j = Json::parse(json_text, nullptr, false);
        require(!j.is_discarded(), errc::input, "algebra JSON does not parse");
        out = new dgc_algebra{dga_from_json(j)};
    });
    return out;
}

void dgc_algebra_free(dgc_algebra* a) { delete a; }

char* dgc_algebra_to_json(const dgc_algebra* a) {
    if (a == nullptr) return nullptr;
    return dup_string(dga_to_json(a->value).dump(2));
}

int dgc_algebra_check(const dgc_algebra* a, char** err) {
    if (a == nullptr) {
        set_err(err, "null algebra");
        return DGC_ERR_INPUT;
    }
    return guarded(err, [&] { a->value.check_invariants(); });
}

dgc_algebra* dgc_algebra_reduce(const dgc_algebra* a, long p, int eps, char** err) {
    if (a == nullptr) {
        set_err(err, "null algebra");
        return nullptr;
    }
    dgc_algebra* out = nullptr;
    guarded(err, [&] {
        RingTag target = eps <= 1 ? RingTag::prime_field(p) : RingTag::cyclic(p, eps);
        out = new dgc_algebra{a->value.base_change(target)};
    });
    return out;
}

int dgc_space_betti_csv(const dgc_algebra* a, int max_degree, char** csv_out, char** err) {
    if (a == nullptr || csv_out == nullptr) {
        set_err(err, "null argument");
        return DGC_ERR_INPUT;
    }
    return guarded(err, [&] {
        require(a->value.ring.is_field(), errc::input, "space tables need F_p coefficients");
        int hi = std::min(max_degree, a->value.top_degree());
        BettiTable t = a->value.complex().betti(0, hi, "space");
        *csv_out = dup_string(betti_to_csv(t));
    });
}

int dgc_run_job_json(const char* spec_json, char** text_out, char** report_json, char** err) {
    if (spec_json == nullptr) {
        set_err(err, "null spec");
        return DGC_ERR_INPUT;
    }
    int code = DGC_ERR_INPUT;
    int rc = guarded(err, [&] {
        Json j = Json::parse(spec_json, nullptr, false);
        require(!j.is_discarded(), errc::input, "job spec is not valid JSON");
        JobSpec spec = JobSpec::from_json(j);
        JobResult res = run_job(spec);
        if (text_out != nullptr) *text_out = dup_string(res.text);
        if (report_json != nullptr) *report_json = dup_string(res.report.dump(2));
        code = res.exit_code;
        if (res.exit_code != 0 && err != nullptr && res.report.contains("error"))
            *err = dup_string(res.report["error"].get<std::string>());
    });
    return rc == DGC_OK ? code : rc;
}

}  // extern "C"
