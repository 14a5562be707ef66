#pragma once

#include <iosfwd>
#include <vector>

#include "recon/families.hpp"
#include "recon/recon_graph.hpp"

namespace recon {

// Applies the steps in order, checking each one; throws ReplayError at the
// first illegal step.  Replaying is pure: same start and steps give the
// same end model.
HModel replay(const ReconSequence& seq);
bool replay_valid(const ReconSequence& seq);

// Relabels every interior vertex of leaf block L of branch a, leaving the
// joining vertex and everything outside L unchanged.
//   Preconditions (PreconditionFailed with the violated name):
//     leaf-block          L is a leaf block of branch a's block tree
//     branch-remainder    the branch keeps a vertex outside L
//     connecting-interior some interior vertex of L has a connecting edge
//     hits-leaf-crucial   relabelings of L cannot reach a leaf-crucial model
ReconSequence plan_relabel_leafblock(const HModel& m, int a, const std::vector<int>& L);

// Relabels all of component C of branch a minus x so that afterwards x has
// a neighbour labeled b; processes C's blocks leaf-first toward x.
ReconSequence plan_slurp_component(const HModel& m, int a, int b, int x,
                                   const std::vector<int>& C);

// K3 models of 3-connected hosts: keeps one component D of branch a minus
// x, siphons the others away, and finishes by relabeling x to b.
ReconSequence plan_slurp_siphon(const HModel& m, int a, int b, int x);

// K2 models of 2-connected hosts: reduce both endpoints to the canonical
// model around the special vertex 0, crossing between the two canonical
// models when their orientations differ.
ReconSequence plan_k2(const HModel& from, const HModel& to);

// Complete host K_m, complete target K_l, m > l: tail normalization onto
// the last label followed by pairwise label swaps through a tail vertex.
ReconSequence plan_clique(const HModel& from, const HModel& to);

// Generalized-wheel host with target K_{l+2}: give hubs distinct labels,
// purge hub labels from the rim, reduce the 2-connected rim as a K2 model,
// then permute canonical models by hub/special/rest exchanges.
ReconSequence plan_genwheel(const HModel& from, const HModel& to, const GenWheelLayout& lay);

struct SplitSpec {
    int v;
    std::vector<int> part1, part2;
};

// Transports a sequence on G to the graph obtained by splitting v into
// x = v and y = n: steps not touching v are copied, each relabeling of v
// expands to the two- or three-step exchange dictated by the current
// lifted model.  LiftFailed carries the offending step index.
ReconSequence lift_sequence_through_split(const ReconSequence& seq, const SplitSpec& split);

// Sequence file format: header "<k> steps", then k lines "vertex label".
void write_sequence(const ReconSequence& seq, std::ostream& out);
std::vector<ReconStep> read_sequence(std::istream& in);

}  // namespace recon
