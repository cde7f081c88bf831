#pragma once

namespace weylkl {

// Whole-group computations come in two flavors: a plain serial loop kept as
// the reference implementation, and an OpenMP version that processes each
// length layer in parallel. Both produce bit-identical results.
enum class ExecMode { serial, parallel };

}  // namespace weylkl
