// Copyright 2026 The permfilter Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


/* Plain C consumer of the public header: builds a state, filters it and
 * checks one value. Exits nonzero on any failure. */

#include <math.h>
#include <stdio.h>

#include "permfilter/permfilter.h"

static int check(pf_status st, const char *what) {
    if (st != PF_OK) {
        fprintf(stderr, "%s failed: %s (%s)\n", what, pf_status_name(st), pf_last_error());
        return 1;
    }
    return 0;
}

int main(void) {
    const double p[4] = {0.8, 0.15, 0.05, 0.0};
    const double zeros[2] = {0.05, 0.15};
    const char *paulis[1] = {"ZZ"};
    const double weights[1] = {1.0};
    pf_state *state = NULL;
    pf_filter *filter = NULL;
    double y = 0.0;
    int failures = 0;

    failures += check(pf_state_from_diagonal(p, 4, &state), "pf_state_from_diagonal");
    failures += check(pf_filter_from_zeros(zeros, 2, &filter), "pf_filter_from_zeros");
    if (failures == 0) {
        failures += check(pf_filter_output(state, paulis, weights, 1, filter, &y), "pf_filter_output");
        if (fabs(y - 1.0) > 1e-12) {
            fprintf(stderr, "unexpected filtered value %.17g\n", y);
            ++failures;
        }
    }
    pf_filter_free(filter);
    pf_state_free(state);
    printf("permfilter %s: %s\n", pf_version(), failures == 0 ? "ok" : "FAILED");
    return failures == 0 ? 0 : 1;
}
