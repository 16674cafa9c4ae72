#include "humbert/finite_symplectic.hpp"

#include <functional>

namespace humbert {

namespace {

mpq_class mod1(const mpq_class& q) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return q - mpq_class(fl);
}

mpz_class mod_pos(const mpz_class& a, const mpz_class& d) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return r;
}

} // namespace

FsElement FiniteSymplecticModule::basis(int i) const {
    FsElement v = zero();
    v[i] = 1;
    return v;
}

FsElement FiniteSymplecticModule::reduce(FsElement v) const {
    check(int(v.size()) == coord_count(), "DimensionMismatch", "element coordinate count");
    for (int i = 0; i < coord_count(); ++i) v[i] = mod_pos(v[i], coord_order(i));
    return v;
}

FsElement FiniteSymplecticModule::add(const FsElement& a, const FsElement& b) const {
    check(a.size() == b.size() && int(a.size()) == coord_count(), "DimensionMismatch",
          "element coordinate count");
    FsElement r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return reduce(std::move(r));
}

FsElement FiniteSymplecticModule::neg(const FsElement& a) const {
    FsElement r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return reduce(std::move(r));
}

mpq_class FiniteSymplecticModule::pairing(const FsElement& a, const FsElement& b) const {
    check(int(a.size()) == coord_count() && int(b.size()) == coord_count(), "DimensionMismatch",
          "pairing of elements with wrong coordinate count");
    const int l = torsion_rank();
    mpq_class s = 0;
    for (int i = 0; i < l; ++i) {
        mpq_class term(a[i] * b[l + i] - a[l + i] * b[i], d_[i]);
        term.canonicalize();
        s += term;
    }
    return mod1(s);
}

std::vector<FsElement> FiniteSymplecticModule::torsion_elements(const mpz_class& n) const {
    const int nc = coord_count();
    std::vector<mpz_class> step(nc), count(nc);
    for (int i = 0; i < nc; ++i) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), coord_order(i).get_mpz_t(), n.get_mpz_t());
        step[i] = coord_order(i) / g;
        count[i] = g;
    }
    std::vector<FsElement> out;
    FsElement cur(nc, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == nc) {
            out.push_back(cur);
            return;
        }
        for (mpz_class t = 0; t < count[i]; ++t) {
            cur[i] = t * step[i];
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

FsElement AntisymplecticMap::apply(const FsElement& x) const {
    check(int(x.size()) == domain.coord_count(), "DimensionMismatch", "map applied to wrong size");
    FsElement y(codomain.coord_count(), 0);
    for (int r = 0; r < matrix.rows(); ++r)
        for (int c = 0; c < matrix.cols(); ++c) y[r] += matrix(r, c) * x[c];
    return codomain.reduce(std::move(y));
}

bool is_antisymplectic(const AntisymplecticMap& f) {
    check(f.domain.same_type(f.codomain), "TypeMismatch",
          "antisymplectic maps need equal module types");
    const int n = f.domain.coord_count();
    check(f.matrix.rows() == n && f.matrix.cols() == n, "DimensionMismatch",
          "map matrix has wrong shape");
    // well-defined mod the orders
    for (int j = 0; j < n; ++j)
        for (int r = 0; r < n; ++r)
            if (mod_pos(f.domain.coord_order(j) * f.matrix(r, j), f.codomain.coord_order(r)) != 0)
                return false;
    // equation (2.1) on basis pairs
    std::vector<FsElement> img(n);
    for (int j = 0; j < n; ++j) img[j] = f.apply(f.domain.basis(j));
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t) {
            mpq_class lhs = f.domain.pairing(f.domain.basis(s), f.domain.basis(t));
            mpq_class rhs = f.codomain.pairing(img[s], img[t]);
            if (mod1(lhs + rhs) != 0) return false;
        }
    return true;
}

FsElement DirectSumModule::embed_first(const FsElement& x) const {
    const int l = factor.torsion_rank();
    check(int(x.size()) == 2 * l, "DimensionMismatch", "element of wrong factor size");
    FsElement v = sum.zero();
    for (int i = 0; i < l; ++i) {
        v[2 * i] = x[i];
        v[2 * l + 2 * i] = x[l + i];
    }
    return sum.reduce(std::move(v));
}

FsElement DirectSumModule::embed_second(const FsElement& y) const {
    const int l = factor.torsion_rank();
    check(int(y.size()) == 2 * l, "DimensionMismatch", "element of wrong factor size");
    FsElement v = sum.zero();
    for (int i = 0; i < l; ++i) {
        v[2 * i + 1] = y[i];
        v[2 * l + 2 * i + 1] = y[l + i];
    }
    return sum.reduce(std::move(v));
}

int DirectSumModule::factor_coord(int c) const {
    const int l = factor.torsion_rank();
    return c < 2 * l ? c / 2 : l + (c - 2 * l) / 2;
}

bool DirectSumModule::coord_in_first(int c) const { return c % 2 == 0; }

DirectSumModule direct_sum(const FiniteSymplecticModule& X) {
    std::vector<mpz_class> merged;
    for (const auto& d : X.divisors()) {
        merged.push_back(d);
        merged.push_back(d);
    }
    DirectSumModule ds;
    ds.factor = X;
    ds.sum = FiniteSymplecticModule(PolarizationType(merged));
    return ds;
}

FiniteSubgroup::FiniteSubgroup(FiniteSymplecticModule parent, std::vector<FsElement> gens)
    : parent_(std::move(parent)) {
    const int n = parent_.coord_count();
    for (auto& g : gens) gens_.push_back(parent_.reduce(std::move(g)));
    IntMat span(n, int(gens_.size()) + n);
    for (int j = 0; j < int(gens_.size()); ++j)
        for (int i = 0; i < n; ++i) span(i, j) = gens_[j][i];
    for (int i = 0; i < n; ++i) span(i, int(gens_.size()) + i) = parent_.coord_order(i);
    lattice_ = column_hermite_basis(span);
    check(lattice_.cols() == n, "Internal", "subgroup lattice must have full rank");
}

mpz_class FiniteSubgroup::order() const {
    mpz_class det = 1;
    for (int i = 0; i < lattice_.rows(); ++i) det *= lattice_(i, i);
    return parent_.order() / det;
}

bool FiniteSubgroup::contains(const FsElement& x) const {
    check(int(x.size()) == parent_.coord_count(), "DimensionMismatch", "membership query size");
    // forward substitution against the lower-triangular lattice basis
    FsElement r = x;
    const int n = lattice_.rows();
    for (int i = 0; i < n; ++i) {
        if (r[i] % lattice_(i, i) != 0) return false;
        mpz_class c = r[i] / lattice_(i, i);
        for (int k = i; k < n; ++k) r[k] -= c * lattice_(k, i);
    }
    return true;
}

std::vector<FsElement> FiniteSubgroup::canonical_generators() const {
    std::vector<FsElement> out;
    for (int j = 0; j < lattice_.cols(); ++j) {
        FsElement v(lattice_.rows());
        for (int i = 0; i < lattice_.rows(); ++i) v[i] = lattice_(i, j);
        v = parent_.reduce(std::move(v));
        bool zero = true;
        for (const auto& c : v)
            if (c != 0) zero = false;
        if (!zero) out.push_back(std::move(v));
    }
    return out;
}

const char* to_string(SubgroupClass c) {
    switch (c) {
        case SubgroupClass::Allowed: return "allowed";
        case SubgroupClass::IsotropicNotAllowed: return "isotropic-not-allowed";
        case SubgroupClass::NotIsotropic: return "not-isotropic";
    }
    return "?";
}

namespace {

// order of the part of K lying inside one factor: intersect K's lattice with
// {v : v_c = 0 mod order(c) on the other factor's coordinates}
mpz_class factor_intersection_order(const DirectSumModule& ds, const FiniteSubgroup& K,
                                    bool first_factor) {
    const int n = ds.sum.coord_count();
    if (n == 0) return 1;
    IntMat LX(n, n);
    for (int c = 0; c < n; ++c)
        LX(c, c) = (ds.coord_in_first(c) == first_factor) ? mpz_class(1) : ds.sum.coord_order(c);
    IntMat paired = hconcat(K.lattice_basis(), -LX);
    IntMat W = hermite_saturated_kernel(to_rat(paired));
    IntMat inter = K.lattice_basis() * W.block(0, 0, n, W.cols());
    IntMat H = column_hermite_basis(inter);
    check(H.cols() == n, "Internal", "lattice intersection lost rank");
    mpz_class det = 1, rel = 1;
    for (int i = 0; i < n; ++i) {
        det *= H(i, i);
        rel *= ds.sum.coord_order(i);
    }
    return rel / det;
}

} // namespace

SubgroupClass classify_subgroup(const DirectSumModule& ds, const FiniteSubgroup& K) {
    check(K.parent().same_type(ds.sum), "TypeMismatch", "subgroup is not over the direct sum");
    const IntMat& L = K.lattice_basis();
    const int n = L.cols();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            FsElement va(n), vb(n);
            for (int i = 0; i < n; ++i) {
                va[i] = L(i, a);
                vb[i] = L(i, b);
            }
            if (ds.sum.pairing(va, vb) != 0) return SubgroupClass::NotIsotropic;
        }
    if (K.order() != ds.factor.order()) return SubgroupClass::IsotropicNotAllowed;
    if (factor_intersection_order(ds, K, true) != 1) return SubgroupClass::IsotropicNotAllowed;
    if (factor_intersection_order(ds, K, false) != 1) return SubgroupClass::IsotropicNotAllowed;
    return SubgroupClass::Allowed;
}

FiniteSubgroup graph_subgroup(const AntisymplecticMap& f) {
    check(is_antisymplectic(f), "NotAntisymplectic", "graph of a non-antisymplectic map");
    DirectSumModule ds = direct_sum(f.domain);
    std::vector<FsElement> gens;
    for (int j = 0; j < f.domain.coord_count(); ++j) {
        FsElement b = f.domain.basis(j);
        gens.push_back(ds.sum.add(ds.embed_first(b), ds.embed_second(f.apply(b))));
    }
    return FiniteSubgroup(ds.sum, std::move(gens));
}

std::vector<AntisymplecticMap> enumerate_antisymplectic(const FiniteSymplecticModule& X,
                                                        const FiniteSymplecticModule& Y) {
    check(X.same_type(Y), "TypeMismatch", "antisymplectic maps need equal module types");
    const int n = X.coord_count();
    std::vector<AntisymplecticMap> out;
    std::vector<FsElement> chosen(n);

    std::vector<std::vector<mpq_class>> target(n, std::vector<mpq_class>(n));
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) target[s][t] = X.pairing(X.basis(s), X.basis(t));

    std::function<void(int)> rec = [&](int t) {
        if (t == n) {
            IntMat F(n, n);
            for (int j = 0; j < n; ++j)
                for (int i = 0; i < n; ++i) F(i, j) = chosen[j][i];
            AntisymplecticMap f{X, Y, std::move(F)};
            check(is_antisymplectic(f), "Internal", "enumerated map failed the final check");
            out.push_back(std::move(f));
            return;
        }
        for (const FsElement& y : Y.torsion_elements(X.coord_order(t))) {
            bool ok = true;
            for (int s = 0; s < t && ok; ++s)
                if (mod1(target[s][t] + Y.pairing(chosen[s], y)) != 0) ok = false;
            if (!ok) continue;
            chosen[t] = y;
            rec(t + 1);
        }
    };
    rec(0);
    return out;
}

std::vector<FiniteSubgroup> enumerate_allowed(const PolarizationType& D, unsigned long bound) {
    check(D.product() <= bound, "BoundExceeded",
          "enumeration bound exceeded: prod d_i = " + D.product().get_str());
    FiniteSymplecticModule X(D);
    std::vector<FiniteSubgroup> out;
    for (const auto& f : enumerate_antisymplectic(X, X)) out.push_back(graph_subgroup(f));
    return out;
}

FiniteSubgroup standard_allowed(const PolarizationType& D) {
    FiniteSymplecticModule X(D);
    DirectSumModule ds = direct_sum(X);
    const int l = X.torsion_rank();
    std::vector<FsElement> gens;
    for (int i = 0; i < l; ++i)
        gens.push_back(ds.sum.add(ds.embed_first(X.basis(i)), ds.embed_second(X.basis(i))));
    for (int i = 0; i < l; ++i)
        gens.push_back(ds.sum.add(ds.embed_first(X.basis(l + i)),
                                  ds.sum.neg(ds.embed_second(X.basis(l + i)))));
    return FiniteSubgroup(ds.sum, std::move(gens));
}

} // namespace humbert
