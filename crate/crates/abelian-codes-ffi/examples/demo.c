/* Builds the 35-element bivariate code with defining set
 * Q(0,0) + Q(1,0) + Q(0,3) and prints its parameters.
 *
 * Compile from the workspace root after `cargo build -p abelian-codes-ffi`:
 *
 *   clang crates/abelian-codes-ffi/examples/demo.c \
 *     -Icrates/abelian-codes-ffi/include \
 *     target/debug/libabelian_codes_ffi.a -lpthread -ldl -lm -o demo
 *
 * Linking the archive by path avoids picking up the shared library,
 * which would need an rpath or LD_LIBRARY_PATH at run time.
 */

#include <stdio.h>

#include "abelian_codes.h"

int main(void) {
    const uint32_t r[2] = {5, 7};
    const uint32_t reps[6] = {0, 0, 1, 0, 0, 3};
    AcCode *code = NULL;

    AcStatus status = ac_code_new(2, r, 2, reps, 3, &code);
    if (status != AC_STATUS_OK) {
        fprintf(stderr, "ac_code_new: %s\n", ac_status_message(status));
        return 1;
    }

    size_t length = 0, dimension = 0;
    uint64_t d_star = 0, bound = 0;
    ac_code_length(code, &length);
    ac_code_dimension(code, &dimension);
    status = ac_apparent_distance(code, &d_star);
    if (status != AC_STATUS_OK) {
        fprintf(stderr, "ac_apparent_distance: %s\n", ac_status_message(status));
        ac_code_free(code);
        return 1;
    }
    ac_bch_bound(code, &bound);

    printf("length %zu, dimension %zu, apparent distance %llu, bch bound %llu\n",
           length, dimension, (unsigned long long)d_star, (unsigned long long)bound);

    ac_code_free(code);
    return 0;
}
