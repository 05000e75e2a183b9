#include "ringinv/analysis.hpp"

namespace ringinv {

std::vector<std::pair<std::string, std::size_t>> Caps::items() const {
  return {{"ideal_scan", ideal_scan}, {"dp", dp},
          {"nilpotency", nilpotency}, {"udim", udim},
          {"group", group},           {"splittings", splittings},
          {"splitting_nodes", splitting_nodes}, {"ideal_count", ideal_count},
          {"samples", samples}};
}

bool Caps::set(const std::string& name, std::size_t value) {
  if (value == 0) return false;
  std::size_t* slot = name == "ideal_scan"        ? &ideal_scan
                      : name == "dp"              ? &dp
                      : name == "nilpotency"      ? &nilpotency
                      : name == "udim"            ? &udim
                      : name == "group"           ? &group
                      : name == "splittings"      ? &splittings
                      : name == "splitting_nodes" ? &splitting_nodes
                      : name == "ideal_count"     ? &ideal_count
                      : name == "samples"         ? &samples
                                                  : nullptr;
  if (!slot) return false;
  *slot = value;
  return true;
}

Analysis::Analysis(GAction action, Caps caps, std::uint64_t seed)
    : action_(std::move(action)), caps_(caps), seed_(seed) {}

Analysis::~Analysis() = default;

const SubringRing& Analysis::fixed_ring() {
  if (!fixed_ring_) fixed_ring_ = fixed_subring(action_);
  return *fixed_ring_;
}

const BadPrimeProfile& Analysis::bad_primes() {
  if (!bad_) bad_ = ringinv::bad_primes(action_, caps_.dp);
  return *bad_;
}

const Subgroup& Analysis::prime_radical() {
  if (!prime_) prime_ = ringinv::prime_radical(ring());
  return *prime_;
}

const Subgroup& Analysis::jacobson_radical() {
  if (!jacobson_) jacobson_ = ringinv::jacobson_radical(ring());
  return *jacobson_;
}

const Subgroup& Analysis::fixed_prime_radical() {
  if (!fixed_prime_) fixed_prime_ = fixed_ring().to_parent(ringinv::prime_radical(fixed_ring().ring));
  return *fixed_prime_;
}

const Subgroup& Analysis::fixed_jacobson_radical() {
  if (!fixed_jacobson_) fixed_jacobson_ = fixed_ring().to_parent(ringinv::jacobson_radical(fixed_ring().ring));
  return *fixed_jacobson_;
}

const Subgroup& Analysis::trace_image() {
  if (!trace_) trace_ = ringinv::trace_image(group(), Subgroup::whole(ring().additive()));
  return *trace_;
}

const NilpotencyResult& Analysis::nilpotency() {
  if (!nil_) nil_ = nilpotency_index(ring(), caps_.nilpotency);
  return *nil_;
}

const NilpotencyResult& Analysis::trace_nilpotency() {
  if (!trace_nil_) trace_nil_ = nilpotency_index(ring(), trace_image(), caps_.dp);
  return *trace_nil_;
}

bool Analysis::order_invertible() const { return ringinv::order_invertible(action_); }

bool Analysis::torsion_free(std::int64_t n) const {
  return is_torsion_free(Subgroup::whole(ring().additive()), n);
}

bool Analysis::fixed_torsion_free(std::int64_t n) const { return is_torsion_free(fixed(), n); }

const IdealLattice& Analysis::invariant_ideals(Side side) {
  auto& slot = inv_ideals_[side_index(side)];
  if (!slot) slot = ringinv::invariant_ideals(action_, side, caps_.ideal_scan, caps_.ideal_count, seed_, caps_.samples);
  return *slot;
}

const IdealLattice& Analysis::fixed_ideals(Side side) {
  auto& slot = fixed_ideals_[side_index(side)];
  if (!slot) {
    const FiniteRing& f = fixed_ring().ring;
    if (f.order() <= caps_.ideal_scan) {
      slot = all_ideals(f, side, caps_.ideal_count);
    } else {
      slot = all_ideals(f, side, caps_.samples);
      slot->exhaustive = false;
    }
  }
  return *slot;
}

const SplittingSearch& Analysis::splittings() {
  if (!splittings_) splittings_ = splitting_search(action_, caps_.splittings, caps_.splitting_nodes);
  return *splittings_;
}

const ProperSplittingCheck& Analysis::proper_check(std::size_t splitting, Side side) {
  auto key = std::make_pair(splitting, side_index(side));
  auto it = proper_.find(key);
  if (it == proper_.end())
    it = proper_.emplace(key, is_proper_splitting(action_, splittings().found.at(splitting), invariant_ideals(side)))
             .first;
  return it->second;
}

Tri Analysis::proper_splitting_group(Side side, std::size_t* index) {
  const auto& s = splittings();
  bool all_refuted = s.exhaustive;
  for (std::size_t i = 0; i < s.found.size(); ++i) {
    const auto& c = proper_check(i, side);
    if (c.proper && c.exhaustive) {
      if (index) *index = i;
      return Tri::Yes;
    }
    if (c.proper) all_refuted = false;
  }
  return all_refuted ? Tri::No : Tri::Unknown;
}

const std::optional<Splitting>& Analysis::averaging() {
  if (!averaging_) {
    if (order_invertible())
      averaging_ = std::optional<Splitting>(averaging_idempotent(action_));
    else
      averaging_ = std::optional<Splitting>();
  }
  return *averaging_;
}

const UdimCertificate& Analysis::udim(Side side) {
  auto& slot = udim_[side_index(side)];
  if (!slot) slot = uniform_dimension(ring(), side, caps_.udim);
  return *slot;
}

const UdimCertificate& Analysis::fixed_udim(Side side) {
  auto& slot = fixed_udim_[side_index(side)];
  if (!slot) slot = uniform_dimension(fixed_ring().ring, side, caps_.udim);
  return *slot;
}

std::size_t Analysis::length(const Subgroup& bottom, Side side) {
  auto& memo = lengths_[side_index(side)];
  auto it = memo.find(bottom);
  if (it != memo.end()) return it->second;
  std::size_t l = module_length(ring(), Subgroup::whole(ring().additive()), bottom, ring_generators(ring()), side);
  memo.emplace(bottom, l);
  return l;
}

std::size_t Analysis::fixed_length(const Subgroup& bottom, Side side) {
  auto& memo = fixed_lengths_[side_index(side)];
  auto it = memo.find(bottom);
  if (it != memo.end()) return it->second;
  std::size_t l = module_length(ring(), fixed(), bottom, fixed().generators(), side);
  memo.emplace(bottom, l);
  return l;
}

Analysis::Reduction Analysis::make_reduction(const Subgroup& kernel, const std::string& suffix) {
  Reduction red;
  red.quotient = quotient_by_ideal(ring(), Ideal{Side::TwoSided, kernel}, ring().name() + "/" + suffix);
  red.induced = induce_on_quotient(group(), red.quotient);
  red.induced.group.set_name(group().name() + "-bar");
  red.image_of_fixed = red.quotient.image(fixed());
  red.analysis = std::make_unique<Analysis>(GAction::of(red.induced.group), caps_, seed_);
  return red;
}

Analysis::Reduction& Analysis::by_prime_radical() {
  if (!by_prime_) by_prime_ = std::make_unique<Reduction>(make_reduction(prime_radical(), "n(R)"));
  return *by_prime_;
}

Analysis::Reduction& Analysis::by_jacobson_radical() {
  if (!by_jacobson_) by_jacobson_ = std::make_unique<Reduction>(make_reduction(jacobson_radical(), "rad(R)"));
  return *by_jacobson_;
}

}  // namespace ringinv
