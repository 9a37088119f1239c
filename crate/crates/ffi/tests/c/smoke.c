#include <stdio.h>
#include <string.h>
#include "liebranch.h"

#define CHECK(cond)                                              \
    do {                                                         \
        if (!(cond)) {                                           \
            fprintf(stderr, "check failed: %s (line %d)\n",      \
                    #cond, __LINE__);                            \
            return 1;                                            \
        }                                                        \
    } while (0)

int main(void) {
    LbRootSystem *g2 = NULL;
    CHECK(lb_root_system_new("G2", &g2) == LB_STATUS_OK);
    CHECK(lb_root_system_rank(g2) == 2);

    int64_t lambda[2] = {1, 0};
    uint64_t v = 0;
    CHECK(lb_weyl_dimension(g2, lambda, 2, &v) == LB_STATUS_OK && v == 7);
    CHECK(lb_g0(g2, lambda, 2, "principal", &v) == LB_STATUS_OK && v == 7);
    CHECK(lb_b_bound(g2, "principal", 64, &v) == LB_STATUS_OK && v == 8);

    lambda[0] = -1;
    CHECK(lb_weyl_dimension(g2, lambda, 2, &v) == LB_STATUS_INVALID_ARGUMENT);
    CHECK(lb_last_error_message() != NULL);

    char *json = NULL;
    lambda[0] = 0;
    lambda[1] = 1;
    CHECK(lb_character_json(g2, lambda, 2, &json) == LB_STATUS_OK);
    CHECK(strstr(json, "[[0,0],2]") != NULL);
    lb_string_free(json);
    lb_root_system_free(g2);

    uint32_t gens[2] = {2, 3};
    LbGeneratorSet *gs = NULL;
    CHECK(lb_generators_new(gens, 2, 1, &gs) == LB_STATUS_OK);
    CHECK(lb_generators_complement_json(gs, 16, &json) == LB_STATUS_OK);
    CHECK(strcmp(json, "[[1]]") == 0);
    lb_string_free(json);
    lb_generators_free(gs);

    printf("ok\n");
    return 0;
}
