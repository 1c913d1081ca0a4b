#include "hochschild.hpp"

namespace dgc {

namespace {

int sign_pow(int e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

HochschildComplex::HochschildComplex(const DGAlgebra& source, int truncation)
    : src_(source), bar_(source, truncation), trunc_(truncation) {
    enumerate_words();
    build_D();
}

void HochschildComplex::enumerate_words() {
    words_.assign(trunc_ + 1, {});
    index_.assign(trunc_ + 1, {});
    for (int n = 0; n <= trunc_; ++n) {
        for (int head = 0; head < src_.total_dim; ++head) {
            int hd = src_.degree_of(head);
            if (hd > n) continue;
            int td = n - hd;
            if (td > bar_.truncation()) continue;
            for (const auto& tail : bar_.words(td)) words_[n].push_back({head, tail});
        }
        std::sort(words_[n].begin(), words_[n].end());
        for (int i = 0; i < static_cast<int>(words_[n].size()); ++i) index_[n][words_[n][i]] = i;
    }
}

void HochschildComplex::build_D() {
    d_.resize(trunc_ + 1);
    for (int n = 0; n <= trunc_; ++n) {
        int target = n + 1 <= trunc_ ? dim(n + 1) : 0;
        SparseMatrix m(target, dim(n), src_.ring);
        if (target == 0) {
            d_[n] = std::move(m);
            continue;
        }
        for (int col = 0; col < dim(n); ++col) {
            const auto& w = words_[n][col];
            int hd = src_.degree_of(w.head);
            int k = static_cast<int>(w.tail.size());
            auto emit = [&](int head_global_degree, const Vec& heads,
                            const std::vector<int>& tail, const Int& coeff) {
                if (coeff == 0) return;
                for (int ord = 0; ord < static_cast<int>(heads.size()); ++ord) {
                    if (heads[ord] == 0) continue;
                    HWord nw{src_.global(head_global_degree, ord), tail};
                    int row = word_index(n + 1, nw);
                    require(row >= 0, errc::invariant, "hochschild word missing under D");
                    m.add_to(row, col, coeff * heads[ord]);
                }
            };

            // d0: head absorbs the first tail letter
            if (k >= 1) {
                Elem prod = src_.mul(src_.basis_elem(w.head), src_.basis_elem(w.tail[0]));
                std::vector<int> rest(w.tail.begin() + 1, w.tail.end());
                emit(prod.degree, prod.coeffs, rest, Int(sign_pow(hd)));
            }
            // -d1: head absorbs the last tail letter from the left
            if (k >= 1) {
                int last = w.tail.back();
                Elem prod = src_.mul(src_.basis_elem(last), src_.basis_elem(w.head));
                std::vector<int> rest(w.tail.begin(), w.tail.end() - 1);
                int expo = hd + k - 1;
                for (int i = 0; i + 1 < k; ++i) expo += src_.degree_of(w.tail[i]);
                expo *= src_.degree_of(last) + 1;
                emit(prod.degree, prod.coeffs, rest, Int(-sign_pow(expo)));
            }
            // d_A (x) delta
            Elem dhead = src_.apply_d(src_.basis_elem(w.head));
            if (!dhead.zero()) emit(dhead.degree, dhead.coeffs, w.tail, Int(1));
            Elem tail_elem = bar_.single_word(w.tail);
            Elem dtail = bar_.apply_delta(tail_elem);
            if (!dtail.zero()) {
                for (int t = 0; t < static_cast<int>(dtail.coeffs.size()); ++t) {
                    if (dtail.coeffs[t] == 0) continue;
                    HWord nw{w.head, bar_.words(dtail.degree)[t]};
                    int row = word_index(n + 1, nw);
                    require(row >= 0, errc::invariant, "hochschild word missing under delta");
                    m.add_to(row, col, Int(sign_pow(hd)) * dtail.coeffs[t]);
                }
            }
        }
        d_[n] = std::move(m);
    }
}

int HochschildComplex::dim(int degree) const {
    if (degree < 0 || degree > trunc_) return 0;
    return static_cast<int>(words_[degree].size());
}

const std::vector<HochschildComplex::HWord>& HochschildComplex::words(int degree) const {
    require(degree >= 0 && degree <= trunc_, errc::window,
            "hochschild degree outside truncation");
    return words_[degree];
}

int HochschildComplex::word_index(int degree, const HWord& w) const {
    if (degree < 0 || degree > trunc_) return -1;
    auto it = index_[degree].find(w);
    return it == index_[degree].end() ? -1 : it->second;
}

int HochschildComplex::word_degree(const HWord& w) const {
    return src_.degree_of(w.head) + bar_.word_degree(w.tail);
}

std::string HochschildComplex::word_name(const HWord& w) const {
    return src_.name_of(w.head) + "(x)" + bar_.word_name(w.tail);
}

const SparseMatrix& HochschildComplex::D(int degree) const {
    require(degree >= 0 && degree <= trunc_, errc::window,
            "hochschild degree outside truncation");
    return d_[degree];
}

CochainComplex HochschildComplex::complex() const {
    CochainComplex c;
    c.ring = src_.ring;
    c.dims.resize(trunc_ + 1);
    for (int n = 0; n <= trunc_; ++n) c.dims[n] = dim(n);
    c.d = d_;
    c.validate_shapes();
    return c;
}

Elem HochschildComplex::single_word(const HWord& w, const Int& coeff) const {
    int n = word_degree(w);
    Elem e = zero_elem(n);
    int idx = word_index(n, w);
    require(idx >= 0, errc::window, "word " + word_name(w) + " outside the truncation");
    e.coeffs[idx] = src_.ring.normalize(coeff);
    return e;
}

Elem HochschildComplex::apply_D(const Elem& e) const {
    if (e.degree < 0 || e.degree > trunc_) return zero_elem(e.degree + 1);
    return Elem{e.degree + 1, d_[e.degree].apply(e.coeffs)};
}

Elem HochschildComplex::include_algebra(const Elem& a) const {
    Elem out = zero_elem(a.degree);
    for (int ord = 0; ord < static_cast<int>(a.coeffs.size()); ++ord) {
        if (a.coeffs[ord] == 0) continue;
        int idx = word_index(a.degree, {src_.global(a.degree, ord), {}});
        require(idx >= 0, errc::window, "include_algebra left the truncation");
        out.coeffs[idx] = a.coeffs[ord];
    }
    return out;
}

Elem HochschildComplex::include_bar(const Elem& bar_elem) const {
    Elem out = zero_elem(bar_elem.degree);
    int unit_head = -1;
    for (int ord = 0; ord < src_.dim(0); ++ord)
        if (src_.unit[ord] != 0) {
            require(unit_head < 0, errc::input, "include_bar needs a one-line unit");
            unit_head = src_.global(0, ord);
        }
    require(unit_head >= 0, errc::input, "include_bar: no unit");
    for (int t = 0; t < static_cast<int>(bar_elem.coeffs.size()); ++t) {
        if (bar_elem.coeffs[t] == 0) continue;
        HWord w{unit_head, bar_.words(bar_elem.degree)[t]};
        int idx = word_index(bar_elem.degree, w);
        require(idx >= 0, errc::window, "include_bar left the truncation");
        out.coeffs[idx] = src_.ring.mul(src_.unit[src_.local(unit_head).second],
                                        bar_elem.coeffs[t]);
    }
    return out;
}

Elem HochschildComplex::psi(const Elem& e) const {
    Elem out = bar_.zero_elem(e.degree);
    for (int idx = 0; idx < static_cast<int>(e.coeffs.size()); ++idx) {
        if (e.coeffs[idx] == 0) continue;
        const HWord& w = words_[e.degree][idx];
        Int a = src_.aug(src_.basis_elem(w.head));
        if (a == 0) continue;
        int t = bar_.word_index(e.degree, w.tail);
        require(t >= 0, errc::invariant, "psi image outside the bar basis");
        out.coeffs[t] = src_.ring.add(out.coeffs[t], src_.ring.mul(a, e.coeffs[idx]));
    }
    return out;
}

SparseMatrix HochschildComplex::psi_matrix(int degree) const {
    SparseMatrix m(bar_.dim(degree), dim(degree), src_.ring);
    for (int idx = 0; idx < dim(degree); ++idx) {
        const HWord& w = words_[degree][idx];
        Int a = src_.aug(src_.basis_elem(w.head));
        if (a == 0) continue;
        int t = bar_.word_index(degree, w.tail);
        if (t >= 0) m.add_to(t, idx, a);
    }
    return m;
}

SparseMatrix HochschildComplex::include_matrix(int degree) const {
    SparseMatrix m(dim(degree), src_.dim(degree), src_.ring);
    for (int ord = 0; ord < src_.dim(degree); ++ord) {
        int idx = word_index(degree, {src_.global(degree, ord), {}});
        if (idx >= 0) m.add_to(idx, ord, 1);
    }
    return m;
}

Elem HochschildComplex::shuffle(const Elem& a, const Elem& b) const {
    require(src_.graded_commutative(), errc::input,
            "hochschild shuffle needs a graded-commutative source: '" + src_.label + "'");
    int n = a.degree + b.degree;
    require(n <= trunc_, errc::window, "hochschild shuffle leaves the truncation");
    Elem out = zero_elem(n);
    for (int ia = 0; ia < dim(a.degree); ++ia) {
        if (a.coeffs[ia] == 0) continue;
        const HWord& wa = words_[a.degree][ia];
        for (int ib = 0; ib < dim(b.degree); ++ib) {
            if (b.coeffs[ib] == 0) continue;
            const HWord& wb = words_[b.degree][ib];
            Elem heads = src_.mul(src_.basis_elem(wa.head), src_.basis_elem(wb.head));
            if (heads.zero()) continue;
            // Koszul sign: the head of b passes the tail of a
            int tail_a_deg = bar_.word_degree(wa.tail);
            int s = sign_pow(src_.degree_of(wb.head) * tail_a_deg);
            Elem tails = bar_.shuffle(bar_.single_word(wa.tail), bar_.single_word(wb.tail));
            Int c = src_.ring.mul(Int(s), src_.ring.mul(a.coeffs[ia], b.coeffs[ib]));
            for (int hord = 0; hord < static_cast<int>(heads.coeffs.size()); ++hord) {
                if (heads.coeffs[hord] == 0) continue;
                for (int t = 0; t < static_cast<int>(tails.coeffs.size()); ++t) {
                    if (tails.coeffs[t] == 0) continue;
                    HWord nw{src_.global(heads.degree, hord), bar_.words(tails.degree)[t]};
                    int idx = word_index(n, nw);
                    require(idx >= 0, errc::invariant, "hochschild shuffle word missing");
                    out.coeffs[idx] = src_.ring.add(
                        out.coeffs[idx],
                        src_.ring.mul(c, src_.ring.mul(heads.coeffs[hord], tails.coeffs[t])));
                }
            }
        }
    }
    return out;
}

BettiTable free_loop_betti(const DGAlgebra& a, int truncation, int degree_hi) {
    require(a.ring.is_field(), errc::input, "free_loop_betti requires field coefficients");
    HochschildComplex hh(a, truncation);
    int window = hh.safe_window();
    if (degree_hi < 0) degree_hi = window;
    require(degree_hi <= window, errc::window,
            "requested degree " + std::to_string(degree_hi) + " outside the safe window " +
                std::to_string(window));
    BettiTable t = hh.complex().betti(0, degree_hi, "hochschild");
    t.truncation = truncation;
    t.safe_window = window;
    return t;
}

}  // namespace dgc
