#include <stdio.h>
#include <stdint.h>
#include "fano_schubert.h"

int main(void) {
    FsGrassmannian *gr = NULL;
    if (fs_grassmannian_new(3, 10, &gr) != FS_STATUS_OK) return 1;
    uint32_t degrees[3] = {2, 2, 2};
    int64_t deg = 0;
    if (fs_fano_degree(gr, degrees, 3, &deg) != FS_STATUS_OK) return 2;
    printf("degree = %lld\n", (long long)deg);
    int64_t chi = 0;
    if (fs_hrr_chi(gr, degrees, 3, 0, &chi) != FS_STATUS_OK) return 3;
    printf("chi(O) = %lld\n", (long long)chi);
    uint32_t lambda[2] = {2, 1};
    uint32_t mu[1] = {1};
    char *json = NULL;
    if (fs_lr_expand(lambda, 2, mu, 1, &json) != FS_STATUS_OK) return 4;
    printf("lr = %s\n", json);
    fs_string_free(json);
    fs_grassmannian_free(gr);
    printf("version = %s\n", fs_version());
    return 0;
}
