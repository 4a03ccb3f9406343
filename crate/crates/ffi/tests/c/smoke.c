#include <math.h>
#include <stdio.h>
#include "bicomplex_sbt.h"

#define CHECK(cond)                                              \
    do {                                                         \
        if (!(cond)) {                                           \
            fprintf(stderr, "check failed line %d: %s\n", __LINE__, #cond); \
            return 1;                                            \
        }                                                        \
    } while (0)

int main(void) {
    BcNumber j = {0.0, 0.0, 1.0, 0.0}, out;
    CHECK(bc_mul(j, j, &out) == BC_STATUS_OK);
    CHECK(out.x1 == -1.0 && out.x2 == 0.0);

    BcNumber e_plus = {0.5, 0.0, 0.0, 0.5};
    CHECK(bc_inverse(e_plus, &out) == BC_STATUS_NULL_CONE);
    CHECK(bc_last_error_message() != NULL);

    BcNumber coeffs[2] = {{0.0, 0.0, 0.0, 0.0}, {1.0, 0.0, 0.0, 0.0}};
    BcHermite *h = NULL;
    CHECK(bc_hermite_create(1.0, coeffs, 2, &h) == BC_STATUS_OK);

    BcMonomial *m = NULL;
    CHECK(bc_sbt_forward(h, 2.0, &m) == BC_STATUS_OK);
    BcNumber z = {0.5, 0.25, -0.5, 0.0};
    CHECK(bc_monomial_eval(m, z, &out) == BC_STATUS_OK);
    CHECK(fabs(out.x1 - 0.5) < 1e-15 && fabs(out.y1 - 0.25) < 1e-15 && fabs(out.x2 + 0.5) < 1e-15);

    BcNumber i = {0.0, 1.0, 0.0, 0.0};
    BcHermite *g = NULL;
    CHECK(bc_frft(h, i, false, &g) == BC_STATUS_OK);
    CHECK(bc_hermite_eval(g, 0.5, &out) == BC_STATUS_OK);
    CHECK(fabs(out.y1 - 0.5 * sqrt(2.0)) < 1e-15);

    BcNumber one = {1.0, 0.0, 0.0, 0.0};
    BcHermite *bad = NULL;
    CHECK(bc_frft(h, one, false, &bad) == BC_STATUS_EXCLUDED_PARAMETER && bad == NULL);

    bc_hermite_free(g);
    bc_monomial_free(m);
    bc_hermite_free(h);
    printf("ok %s\n", bc_version());
    return 0;
}
