// Copyright 2026 The zenohol Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace zenohol {
inline constexpr const char* kVersion = "0.1.0";
}
