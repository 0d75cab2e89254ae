// flip / reference-edge transformations; these need cycle labels, hence they
// live apart from the core representation arithmetic.
#include <algorithm>

#include "orthoradial/labeling.hpp"

namespace orth {

void validate_rep(const Rep& rep) {
  const PlaneGraph& g = rep.g();
  if ((int)rep.corner.size() != g.num_darts())
    throw Error(Err::NotLocallyConsistent, "corner table does not match dart count");
  if (rep.inst.central_face == rep.inst.outer_face)
    throw Error(Err::ParseError, "central face equals outer face (orthogonal case, not handled)");
  if (rep.reference_dart < 0 || rep.reference_dart >= g.num_darts())
    throw Error(Err::ParseError, "bad reference dart");
  if (g.dart_face[PlaneGraph::twin(rep.reference_dart)] != rep.inst.outer_face)
    throw Error(Err::NotOnOuterCycle, "reference dart must have the outer face on its left");
  auto C = outermost_cycle(rep);
  if (std::find(C.begin(), C.end(), rep.reference_dart) == C.end())
    throw Error(Err::NotOnOuterCycle, "reference dart is not on the outermost essential cycle");
}

Rep flip(const Rep& rep) {
  auto C = central_cycle(rep);
  auto lab = labels(rep, C);
  if (lab.cls == CycleClass::Increasing || lab.cls == CycleClass::Decreasing)
    throw Error(Err::CentralFaceStrictlyMonotone,
                "central cycle is strictly monotone; flip undefined");
  int pick = -1;
  for (size_t i = 0; i < C.size(); ++i)
    if (lab.labels[i] == 0) {
      pick = C[i];
      break;
    }
  if (pick == -1)
    throw Error(Err::Internal, "no label-0 edge on a non-monotone central cycle");
  Rep out = rep;
  std::swap(out.inst.central_face, out.inst.outer_face);
  out.reference_dart = PlaneGraph::twin(pick);
  return out;
}

Rep change_reference_edge(const Rep& rep, int new_ref) {
  auto C = outermost_cycle(rep);
  auto it0 = std::find(C.begin(), C.end(), rep.reference_dart);
  if (it0 == C.end()) throw Error(Err::Internal, "reference dart not on outermost cycle");
  auto it1 = std::find(C.begin(), C.end(), new_ref);
  if (it1 == C.end())
    throw Error(Err::NotOnOuterCycle, "new reference dart is not on the outermost cycle");
  if (new_ref == rep.reference_dart) return rep;
  // subpath of C from the old to the new reference dart, inclusive
  std::vector<int> sub;
  size_t n = C.size();
  for (size_t i = it0 - C.begin();; i = (i + 1) % n) {
    sub.push_back(C[i]);
    if (C[i] == new_ref) break;
  }
  if (rep.rot_path(sub) != 0)
    throw Error(Err::RotationNonZero,
                "rot(C_o[e*, e**]) != 0: labelings would change");
  Rep out = rep;
  out.reference_dart = new_ref;
  return out;
}

}  // namespace orth
