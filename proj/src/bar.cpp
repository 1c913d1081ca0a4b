#include "bar.hpp"

#include <algorithm>

namespace dgc {

namespace {

int sign_pow(int e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

void require_bar_input(const DGAlgebra& a) {
    require(a.is_connected(), errc::input,
            "bar construction needs a connected source (A^0 = span of the unit): '" + a.label +
                "'");
    require(a.is_one_reduced(), errc::input,
            "bar construction needs a vanishing degree-1 part, otherwise the degree truncation "
            "is unsound: '" +
                a.label + "'");
}

BarComplex::BarComplex(const DGAlgebra& source, int truncation) : src_(source), trunc_(truncation) {
    require(truncation >= 1, errc::input, "bar truncation must be >= 1");
    require_bar_input(src_);
    for (int g = 0; g < src_.total_dim; ++g)
        if (src_.degree_of(g) >= 2) letters_.push_back(g);
    enumerate_words();
    build_delta();
}

void BarComplex::enumerate_words() {
    words_.assign(trunc_ + 1, {});
    index_.assign(trunc_ + 1, {});
    words_[0].push_back({});  // the empty word spans degree 0
    for (int d = 1; d <= trunc_; ++d) {
        for (int letter : letters_) {
            int s = suspended(letter);
            if (s > d) continue;
            for (const auto& tail : words_[d - s]) {
                std::vector<int> w;
                w.reserve(tail.size() + 1);
                w.push_back(letter);
                w.insert(w.end(), tail.begin(), tail.end());
                words_[d].push_back(std::move(w));
            }
        }
        std::sort(words_[d].begin(), words_[d].end(),
                  [](const std::vector<int>& a, const std::vector<int>& b) {
                      if (a.size() != b.size()) return a.size() < b.size();
                      return a < b;
                  });
        for (int i = 0; i < static_cast<int>(words_[d].size()); ++i) index_[d][words_[d][i]] = i;
    }
    index_[0][{}] = 0;
}

void BarComplex::build_delta() {
    delta_.resize(trunc_ + 1);
    for (int d = 0; d <= trunc_; ++d) {
        int target = d + 1 <= trunc_ ? dim(d + 1) : 0;
        SparseMatrix m(target, dim(d), src_.ring);
        if (d + 1 > trunc_) {
            delta_[d] = std::move(m);
            continue;
        }
        for (int col = 0; col < dim(d); ++col) {
            const auto& w = words_[d][col];
            int k = static_cast<int>(w.size());
            int eps = 0;
            for (int i = 0; i < k; ++i) {
                // delta': replace letter i by its differential
                Elem dl = src_.apply_d(src_.basis_elem(w[i]));
                if (!dl.zero()) {
                    for (int ord = 0; ord < static_cast<int>(dl.coeffs.size()); ++ord) {
                        if (dl.coeffs[ord] == 0) continue;
                        std::vector<int> nw = w;
                        nw[i] = src_.global(dl.degree, ord);
                        int row = word_index(d + 1, nw);
                        require(row >= 0, errc::invariant, "bar word missing under delta'");
                        m.add_to(row, col, Int(-sign_pow(eps)) * dl.coeffs[ord]);
                    }
                }
                // delta'': merge letters i-1 and i
                if (i >= 1) {
                    Elem prod = src_.mul(src_.basis_elem(w[i - 1]), src_.basis_elem(w[i]));
                    for (int ord = 0; ord < static_cast<int>(prod.coeffs.size()); ++ord) {
                        if (prod.coeffs[ord] == 0) continue;
                        std::vector<int> nw;
                        nw.reserve(k - 1);
                        nw.insert(nw.end(), w.begin(), w.begin() + i - 1);
                        nw.push_back(src_.global(prod.degree, ord));
                        nw.insert(nw.end(), w.begin() + i + 1, w.end());
                        int row = word_index(d + 1, nw);
                        require(row >= 0, errc::invariant, "bar word missing under delta''");
                        m.add_to(row, col, Int(sign_pow(eps)) * prod.coeffs[ord]);
                    }
                }
                eps += suspended(w[i]);
            }
        }
        delta_[d] = std::move(m);
    }
}

int BarComplex::dim(int degree) const {
    if (degree < 0 || degree > trunc_) return 0;
    return static_cast<int>(words_[degree].size());
}

const std::vector<std::vector<int>>& BarComplex::words(int degree) const {
    require(degree >= 0 && degree <= trunc_, errc::window,
            "bar degree " + std::to_string(degree) + " outside truncation " +
                std::to_string(trunc_));
    return words_[degree];
}

int BarComplex::word_index(int degree, const std::vector<int>& w) const {
    if (degree < 0 || degree > trunc_) return -1;
    auto it = index_[degree].find(w);
    return it == index_[degree].end() ? -1 : it->second;
}

int BarComplex::word_degree(const std::vector<int>& w) const {
    int d = 0;
    for (int letter : w) d += suspended(letter);
    return d;
}

std::string BarComplex::word_name(const std::vector<int>& w) const {
    std::string out = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += "|";
        out += src_.name_of(w[i]);
    }
    return out + "]";
}

const SparseMatrix& BarComplex::delta(int degree) const {
    require(degree >= 0 && degree <= trunc_, errc::window, "bar degree outside truncation");
    return delta_[degree];
}

CochainComplex BarComplex::complex() const {
    CochainComplex c;
    c.ring = src_.ring;
    c.dims.resize(trunc_ + 1);
    for (int d = 0; d <= trunc_; ++d) c.dims[d] = dim(d);
    c.d = delta_;
    c.validate_shapes();
    return c;
}

Elem BarComplex::zero_elem(int degree) const { return Elem{degree, Vec(dim(degree), 0)}; }

Elem BarComplex::single_word(const std::vector<int>& w, const Int& coeff) const {
    int d = word_degree(w);
    Elem e = zero_elem(d);
    int idx = word_index(d, w);
    require(idx >= 0, errc::window, "word " + word_name(w) + " outside the truncation");
    e.coeffs[idx] = src_.ring.normalize(coeff);
    return e;
}

Elem BarComplex::apply_delta(const Elem& e) const {
    if (e.degree < 0 || e.degree > trunc_) return zero_elem(e.degree + 1);
    return Elem{e.degree + 1, delta_[e.degree].apply(e.coeffs)};
}

BarComplex::TensorElem BarComplex::reduced_coproduct(const Elem& e) const {
    TensorElem out;
    if (e.degree < 0 || e.degree > trunc_) return out;
    for (int idx = 0; idx < dim(e.degree); ++idx) {
        if (e.coeffs[idx] == 0) continue;
        const auto& w = words_[e.degree][idx];
        for (std::size_t cut = 1; cut < w.size(); ++cut) {
            std::vector<int> left(w.begin(), w.begin() + cut);
            std::vector<int> right(w.begin() + cut, w.end());
            int dl = word_degree(left), dr = word_degree(right);
            int il = word_index(dl, left), ir = word_index(dr, right);
            require(il >= 0 && ir >= 0, errc::invariant, "deconcatenation left the truncation");
            Int& v = out[{dl, il, dr, ir}];
            v = src_.ring.add(v, e.coeffs[idx]);
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

namespace {

void shuffle_rec(const BarComplex& bar, const DGAlgebra& src, const std::vector<int>& w1,
                 std::size_t i1, int rest1_susp, const std::vector<int>& w2, std::size_t i2,
                 std::vector<int>& acc, int sign, const Int& coeff, Elem& out) {
    if (i1 == w1.size() && i2 == w2.size()) {
        int d = bar.word_degree(acc);
        int idx = bar.word_index(d, acc);
        require(idx >= 0, errc::window, "shuffle left the truncation");
        out.coeffs[idx] = src.ring.add(out.coeffs[idx], Int(sign) * coeff);
        return;
    }
    if (i1 < w1.size()) {
        acc.push_back(w1[i1]);
        shuffle_rec(bar, src, w1, i1 + 1, rest1_susp - (src.degree_of(w1[i1]) - 1), w2, i2, acc,
                    sign, coeff, out);
        acc.pop_back();
    }
    if (i2 < w2.size()) {
        int s2 = src.degree_of(w2[i2]) - 1;
        int extra = (s2 % 2) * (rest1_susp % 2);
        acc.push_back(w2[i2]);
        shuffle_rec(bar, src, w1, i1, rest1_susp, w2, i2 + 1, acc,
                    extra % 2 == 0 ? sign : -sign, coeff, out);
        acc.pop_back();
    }
}

}  // namespace

Elem BarComplex::shuffle(const Elem& a, const Elem& b) const {
    require(src_.graded_commutative(), errc::input,
            "shuffle product needs a graded-commutative source: '" + src_.label + "'");
    Elem out = zero_elem(a.degree + b.degree);
    require(a.degree + b.degree <= trunc_, errc::window, "shuffle product leaves the truncation");
    for (int ia = 0; ia < dim(a.degree); ++ia) {
        if (a.coeffs[ia] == 0) continue;
        for (int ib = 0; ib < dim(b.degree); ++ib) {
            if (b.coeffs[ib] == 0) continue;
            const auto& w1 = words_[a.degree][ia];
            const auto& w2 = words_[b.degree][ib];
            std::vector<int> acc;
            Int c = src_.ring.mul(a.coeffs[ia], b.coeffs[ib]);
            shuffle_rec(*this, src_, w1, 0, a.degree, w2, 0, acc, 1, c, out);
        }
    }
    for (auto& x : out.coeffs) x = src_.ring.normalize(x);
    return out;
}

bool BarComplex::class_nonzero(const Elem& cocycle) const {
    require(apply_delta(cocycle).zero(), errc::input, "class_nonzero expects a delta-cocycle");
    if (cocycle.zero()) return false;
    int d = cocycle.degree;
    SparseMatrix din = d >= 1 ? delta_[d - 1] : SparseMatrix(dim(0), 0, src_.ring);
    return !solve(din, cocycle.coeffs).solvable;
}

DGCoalgebra BarComplex::as_coalgebra() const {
    DGCoalgebra C;
    C.ring = src_.ring;
    C.label = "bar(" + src_.label + ")@" + std::to_string(trunc_);
    for (int d = 0; d <= trunc_; ++d)
        for (const auto& w : words_[d]) C.basis.add(d, word_name(w));
    C.diffs = delta_;
    C.counit.assign(1, 1);  // dual to the empty word
    C.coaug.assign(1, 1);
    C.diff_complete_below = trunc_;  // delta out of the top degree is cut off
    C.finalize();
    // full deconcatenation coproduct
    for (int d = 0; d <= trunc_; ++d)
        for (int idx = 0; idx < dim(d); ++idx) {
            const auto& w = words_[d][idx];
            int g = C.global(d, idx);
            auto& terms = C.coproduct[g];
            for (std::size_t cut = 0; cut <= w.size(); ++cut) {
                std::vector<int> left(w.begin(), w.begin() + cut);
                std::vector<int> right(w.begin() + cut, w.end());
                int dl = word_degree(left), dr = word_degree(right);
                terms.push_back({C.global(dl, word_index(dl, left)),
                                 C.global(dr, word_index(dr, right)), Int(1)});
            }
        }
    return C;
}

SuspensionResult loop_suspension(const BarComplex& bar, const Elem& representative) {
    const DGAlgebra& A = bar.source();
    require(A.apply_d(representative).zero(), errc::input,
            "loop suspension needs a cocycle representative");
    SuspensionResult res;
    res.bar_class = bar.zero_elem(representative.degree - 1);
    if (representative.degree == 0 || representative.zero()) {
        res.nonzero = false;
        res.primitive = true;
        return res;
    }
    for (int ord = 0; ord < static_cast<int>(representative.coeffs.size()); ++ord) {
        if (representative.coeffs[ord] == 0) continue;
        std::vector<int> w{A.global(representative.degree, ord)};
        int idx = bar.word_index(representative.degree - 1, w);
        require(idx >= 0, errc::window, "suspension word outside the truncation");
        res.bar_class.coeffs[idx] = representative.coeffs[ord];
    }
    res.nonzero = bar.class_nonzero(res.bar_class);
    // single-letter words have vanishing reduced coproduct
    res.primitive = bar.reduced_coproduct(res.bar_class).empty();
    return res;
}

BettiTable loop_betti(const DGAlgebra& a, int truncation, int degree_hi) {
    require(a.ring.is_field(), errc::input, "loop_betti requires field coefficients");
    BarComplex bar(a, truncation);
    int window = bar.safe_window();
    if (degree_hi < 0) degree_hi = window;
    require(degree_hi <= window, errc::window,
            "requested degree " + std::to_string(degree_hi) + " outside the safe window " +
                std::to_string(window));
    BettiTable t = bar.complex().betti(0, degree_hi, "bar");
    t.truncation = truncation;
    t.safe_window = window;
    return t;
}

}  // namespace dgc
