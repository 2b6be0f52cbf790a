#pragma once

#include <cstdint>

#include "figplane/collineations.hpp"
#include "figplane/special_sets.hpp"

namespace figplane {

/// PG(2,q^3) together with its type tables and the orbit partition.
/// Built once per q and shared read-only by every check.
class Workspace {
 public:
  Workspace(std::uint32_t p, std::uint32_t k, unsigned jobs = 1)
      : Workspace(build_field_tower(p, k), jobs) {}

  explicit Workspace(FieldCtx field, unsigned jobs = 1)
      : pg_(std::move(field)),
        types_(compute_types(pg_, jobs)),
        partition_(partition_and_census(pg_, types_)),
        jobs_(jobs) {}

  const ProjectivePlane& pg() const { return pg_; }
  const FieldCtx& field() const { return pg_.field(); }
  const TypeTable& types() const { return types_; }
  const OrbitPartition& partition() const { return partition_; }
  std::uint32_t q() const { return pg_.q(); }
  unsigned jobs() const { return jobs_; }

  /// Index 0..q-2 of a norm class c in GF(q)*, matching norm_class_reps.
  std::uint32_t norm_class_index(Elem c) const {
    return field().log(c) / field().norm_exponent();
  }

 private:
  ProjectivePlane pg_;
  TypeTable types_;
  OrbitPartition partition_;
  unsigned jobs_;
};

}  // namespace figplane
