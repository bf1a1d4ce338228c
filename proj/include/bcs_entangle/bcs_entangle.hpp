// Copyright 2026 The bcs-entangle Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "bcs_entangle/bessel.hpp"
#include "bcs_entangle/correlators.hpp"
#include "bcs_entangle/entanglement.hpp"
#include "bcs_entangle/errors.hpp"
#include "bcs_entangle/model.hpp"
#include "bcs_entangle/quadrature.hpp"
#include "bcs_entangle/report.hpp"
#include "bcs_entangle/run_config.hpp"
