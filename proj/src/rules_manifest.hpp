#pragma once

namespace mopdom {

extern const char* const kBuiltinRulesManifest;

}  // namespace mopdom
