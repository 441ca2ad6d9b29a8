#include <stdio.h>
#include <string.h>

#include "lefcon.h"

static const char *SOURCE =
    "complex sphere\n"
    "  vertices a b c d\n"
    "  facet a b c\n"
    "  facet a b d\n"
    "  facet a c d\n"
    "  facet b c d\n"
    "end\n";

int main(void) {
    LefconWorkspace *ws = NULL;
    if (lefcon_workspace_parse(SOURCE, &ws) != LEFCON_STATUS_OK) {
        fprintf(stderr, "parse: %s\n", lefcon_last_error());
        return 1;
    }
    size_t betti[4];
    size_t len = 0;
    if (lefcon_betti(ws, "sphere", betti, 4, &len) != LEFCON_STATUS_OK || len != 3 || betti[0] != 1 ||
        betti[1] != 0 || betti[2] != 1) {
        fprintf(stderr, "betti\n");
        return 1;
    }
    int64_t chi = 0;
    if (lefcon_euler(ws, "sphere", &chi) != LEFCON_STATUS_OK || chi != 2) {
        fprintf(stderr, "euler\n");
        return 1;
    }
    const char *argv[] = {"orient", "sphere"};
    char *json = NULL;
    if (lefcon_run(ws, argv, 2, &json) != LEFCON_STATUS_OK || strstr(json, "\"orient\"") == NULL) {
        fprintf(stderr, "run\n");
        return 1;
    }
    lefcon_string_free(json);
    lefcon_workspace_free(ws);
    printf("ok %s\n", lefcon_version());
    return 0;
}
