#pragma once

namespace wheelkit {

/// Execution policy for the loops that fan out over vertices, pairs or
/// edges. Both policies return identical results.
enum class Exec { serial, parallel };

}  // namespace wheelkit
