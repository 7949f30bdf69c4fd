#pragma once

#include <memory>
#include <string>

#include "lindel/finite_algebra.hpp"
#include "lindel/groebner.hpp"

namespace lindel {

// Engine-agnostic ideal arithmetic for filtration verification. The artinian
// implementation runs on the multiplication table; the graded one on lifted
// Groebner bases. A nonzero modulus interprets everything in R/(modulus).
class FiltrationEngine {
 public:
  virtual ~FiltrationEngine() = default;
  virtual size_t make(const std::vector<Poly>& gens) = 0;
  virtual bool is_proper(size_t) = 0;
  virtual bool is_zero(size_t) = 0;
  virtual bool equal(size_t, size_t) = 0;
  virtual bool contains_poly(size_t, const Poly&) = 0;
  virtual size_t colon_elt(size_t, const Poly&) = 0;
  virtual size_t sum_elt(size_t, const Poly&) = 0;
  virtual bool wf2_holds(size_t) = 0;             // I ∩ m^2 = m I
  virtual bool strong2_holds(size_t, int s) = 0;  // I ∩ m^{s+1} = m^s I
  virtual std::vector<Poly> min_gens(size_t) = 0;
  virtual int default_sbound() = 0;
  virtual bool sbound_complete() = 0;  // true when the s-range is exhaustive
  virtual std::string name() = 0;
};

std::unique_ptr<FiltrationEngine> make_filtration_engine(const RingPresentation& P,
                                                         const std::vector<Poly>& modulus = {},
                                                         const Budget& bud = {});

struct WitnessEntry {
  int ideal_index = -1;
  int j_index = -1;
  Poly x;
  int colon_index = -1;
};

struct FiltrationCertificate {
  std::vector<std::vector<Poly>> ideal_gens;
  std::vector<std::string> names;
  bool wf1 = false;
  std::string wf1_reason;
  std::vector<bool> wf2;
  std::vector<bool> wf3;
  std::vector<WitnessEntry> witnesses;  // one per ideal; trivial for (0)
  bool weak_ok = false;
  bool strong_checked = false;
  int sbound = 0;
  bool sbound_complete = false;
  std::vector<std::vector<int>> strong_failures;  // failing s per ideal
  bool strong_ok = false;
  std::string engine;
};

FiltrationCertificate verify_weak_koszul_filtration(const RingPresentation& P,
                                                    const std::vector<std::vector<Poly>>& ideals,
                                                    const std::vector<Poly>& modulus = {},
                                                    const Budget& bud = {});
// sbound <= 0 selects the engine default (nilpotency index / 2 * max generator degree)
FiltrationCertificate verify_koszul_filtration(const RingPresentation& P,
                                               const std::vector<std::vector<Poly>>& ideals,
                                               int sbound = 0,
                                               const std::vector<Poly>& modulus = {},
                                               const Budget& bud = {});

// ordered elements y_1..y_p in m \ m^2 walking the stored witnesses
std::vector<Poly> extract_generator_chain(const RingPresentation& P,
                                          const FiltrationCertificate& C, int ideal_index,
                                          const Budget& bud = {});

struct LiftResult {
  char case_used = '?';  // 'a' (regular) or 'b' (y^2 = 0, Ann(y)/(y) in F_bar)
  std::vector<std::vector<Poly>> lifted;
  FiltrationCertificate reverification;
};

// Canonical lifting of a weak Koszul filtration of R/(y) to R.
LiftResult lift_filtration(const RingPresentation& P, const Poly& y,
                           const std::vector<std::vector<Poly>>& fbar, const Budget& bud = {});

enum class CanonicalKind { regular, dim1_canonical, stretched_gorenstein, dim1_gorenstein };
CanonicalKind canonical_kind_of(const std::string& name);

std::vector<std::vector<Poly>> canonical_filtration(const RingPresentation& P,
                                                    CanonicalKind kind, const Budget& bud = {});

// filtration input file: one `name = gen, gen, ...` per line; empty or 0 for (0)
std::vector<std::pair<std::string, std::vector<Poly>>> parse_filtration_file(
    const Ring& R, const std::string& text);

}  // namespace lindel
