#include "weylkit/facto.hpp"

#include <stdexcept>

#include "weylkit/smallgroup.hpp"

namespace weylkit {

std::string FactorizationRecord::homogeneity_tag() const
{
  if (!homogeneous)
    return "isomorphism unchecked";
  return *homogeneous ? "homogeneous" : "not homogeneous";
}

std::optional<FactorizationRecord> verify_factorization(PermGroup const &H, PermGroup const &A, PermGroup const &B)
{
  if (!A.is_subgroup_of(H) || !B.is_subgroup_of(H))
    throw std::invalid_argument("verify_factorization: factors must be subgroups of H");
  BigInt const h = H.order(), a = A.order(), b = B.order();
  // |AB| = |A||B| / |A cap B| <= |H|, so the identity fails early when |A||B| < |H|
  if (a * b < h || (a * b) % h != 0)
    return std::nullopt;
  PermGroup I = intersection(A, B);
  if (h * I.order() != a * b)
    return std::nullopt;
  FactorizationRecord r{H, A, B, I.order(), a != h && b != h, std::nullopt};
  if (a != b)
    r.homogeneous = false;
  else if (a <= BigInt(kIsomorphismCap))
    r.homogeneous = small_group_isomorphic(A, B);
  return r;
}

bool sylow2_isomorphic(PermGroup const &K, PermGroup const &L)
{
  PermGroup const PK = sylow(K, 2), PL = sylow(L, 2);
  if (PK.order() != PL.order())
    return false;
  return small_group_isomorphic(PK, PL);
}

std::vector<FactorizationRecord> search_factorizations(PermGroup const &H, std::uint64_t m, FactorPredicate const &pred,
                                                       std::optional<std::vector<PermGroup>> candidates)
{
  if (m == 0)
    throw std::invalid_argument("search_factorizations: m must be positive");
  std::vector<PermGroup> Ks;
  if (candidates) {
    for (auto &K : *candidates)
      if (K.order() % m == 0)
        Ks.push_back(std::move(K));
  } else {
    for (auto &rec : enumerate_subgroups(H, m))
      Ks.push_back(std::move(rec.group));
  }
  std::vector<FactorizationRecord> out;
  for (std::size_t i = 0; i < Ks.size(); ++i)
    for (std::size_t j = i + 1; j < Ks.size(); ++j) {
      auto rec = verify_factorization(H, Ks[i], Ks[j]);
      if (rec && (!pred || pred(Ks[i], Ks[j])))
        out.push_back(std::move(*rec));
    }
  return out;
}

} // namespace weylkit
