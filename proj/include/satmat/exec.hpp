#pragma once

namespace satmat {

// Execution policy for the enumeration-heavy kernels. parallel shards work
// across OpenMP threads when compiled in; results are identical to serial.
enum class Exec { serial, parallel };

}  // namespace satmat
