// SPDX-License-Identifier: Apache-2.0
//
// radiomap: GP quantile maps and outage-constrained rate selection
// Copyright (C) 2026 The radiomap authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

namespace radiomap {

/// Standard normal quantile (Wichura AS241, about 1e-16 relative accuracy).
/// Requires 0 < p < 1; throws DomainError otherwise.
double normal_quantile(double p);

/// Inverse error function on (-1, 1): rational initial guess from the normal
/// quantile followed by a Newton step against std::erf / std::erfc.
/// Odd by construction; throws DomainError outside the open interval.
double inverse_erf(double p);

}  // namespace radiomap
