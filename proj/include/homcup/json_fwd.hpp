#pragma once

// The vendored nlohmann/json 3.11 uses an ABI-tag inline namespace, so a
// hand-rolled forward declaration will not match it; include the real thing.
#include <json.hpp>
