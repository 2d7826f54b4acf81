#include "sturmion/sturm_chain.hpp"

#include <string>

#include "sturmion/error.hpp"

namespace sturmion {

std::pair<Polynomial, Polynomial> sturmian_pair(const Polynomial& p) {
    if (p.degree() < 1) throw Error(ErrorKind::InvalidArgument, "Sturmian pair needs degree >= 1");
    if (!p.is_monic()) throw Error(ErrorKind::NonMonic, "Sturmian pair needs a monic polynomial");
    const Scalar deg(static_cast<long>(p.degree()));
    return {p, derivative(p).scaled(Scalar(1) / deg)};
}

SturmChain build_chain(const Polynomial& p_top, const Polynomial& p_next) {
    if (!p_top.is_monic() || !p_next.is_monic()) {
        throw Error(ErrorKind::NonMonic, "chain inputs must be monic");
    }
    if (p_next.degree() != p_top.degree() - 1 || p_top.degree() < 1) {
        throw Error(ErrorKind::InvalidArgument, "chain inputs must have consecutive degrees N+1 > N >= 0");
    }
    const int n_top = p_next.degree();
    SturmChain chain;
    chain.polys.reserve(static_cast<size_t>(n_top) + 2);
    chain.polys.push_back(p_top);
    chain.polys.push_back(p_next);
    chain.b.resize(static_cast<size_t>(n_top) + 1);
    chain.u.resize(static_cast<size_t>(n_top));

    // prev = P_{n+1}, cur = P_n; P_{n+1} = (x - b_n) P_n - u_n P_{n-1}.
    for (int n = n_top; n >= 0; --n) {
        const Polynomial& prev = chain.polys[chain.polys.size() - 2];
        const Polynomial& cur = chain.polys.back();
        auto [q, r] = divmod(prev, cur);
        chain.b[static_cast<size_t>(n)] = -q.coeff(0);
        if (n == 0) break;
        if (r.is_zero()) {
            throw Error(ErrorKind::ZeroRemainder,
                        "exact common factor at step n=" + std::to_string(n) + " (non-simple roots)");
        }
        if (r.degree() != n - 1) {
            throw Error(ErrorKind::DegreeGap, "remainder at step n=" + std::to_string(n) + " has degree " +
                                                  std::to_string(r.degree()) + ", expected " +
                                                  std::to_string(n - 1));
        }
        const Scalar u = -r.leading();
        if (u.sign() <= 0) {
            throw Error(ErrorKind::NonPositiveU, "u_" + std::to_string(n) + " = " + u.to_string() + " <= 0");
        }
        chain.u[static_cast<size_t>(n) - 1] = u;
        chain.polys.push_back(r.scaled(Scalar(-1) / u).monic());
    }
    return chain;
}

int sign_variations(const SturmChain& chain, const Scalar& x) {
    int variations = 0;
    int last = 0;
    for (const auto& p : chain.polys) {
        const int s = eval(p, x).sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

int sign_variations_at_infinity(const SturmChain& chain, bool positive) {
    int variations = 0;
    int last = 0;
    for (const auto& p : chain.polys) {
        int s = p.leading().sign();
        if (!positive && p.degree() % 2 == 1) s = -s;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

SturmSequence::SturmSequence(const Polynomial& p) {
    if (p.degree() < 1) return;
    auto [top, next] = sturmian_pair(p.monic());
    chain_ = build_chain(top, next);
}

int SturmSequence::count(const Scalar& lo, const Scalar& hi) const {
    if (!(lo < hi)) throw Error(ErrorKind::InvalidArgument, "interval needs lo < hi");
    if (chain_.polys.empty()) return 0;
    if (eval(chain_.top(), lo).is_zero()) throw Error(ErrorKind::EndpointIsRoot, "lo = " + lo.to_string() + " is a root");
    if (eval(chain_.top(), hi).is_zero()) throw Error(ErrorKind::EndpointIsRoot, "hi = " + hi.to_string() + " is a root");
    return sign_variations(chain_, lo) - sign_variations(chain_, hi);
}

int SturmSequence::total() const {
    if (chain_.polys.empty()) return 0;
    return sign_variations_at_infinity(chain_, false) - sign_variations_at_infinity(chain_, true);
}

int count_roots(const Polynomial& p, const Scalar& lo, const Scalar& hi) {
    if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "zero polynomial has no finite root count");
    return SturmSequence(p).count(lo, hi);
}

bool interlaces(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero() || q.degree() != p.degree() - 1) return false;
    try {
        build_chain(p.monic(), q.monic());
        return true;
    } catch (const Error&) {
        return false;
    }
}

}  // namespace sturmion
