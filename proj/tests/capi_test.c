/* Exercises the C interface from C. */
#include <wtorelli/wtorelli.h>

#include <stdio.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                                                                                   \
    do {                                                                                                               \
        if (!(cond)) {                                                                                                 \
            fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond);                                        \
            ++failures;                                                                                                \
        }                                                                                                              \
    } while (0)

int main(void)
{
    const int w122[] = {2, 3, 4, 5, 7};
    const char* f122 = "x0^7 + x0*x2^3 + x1^3*x3 + x2*x3^2 + x4^2";
    wt_ring* ring = NULL;
    uint64_t dim = 0;
    long sigma = 0;
    int qs = -1;

    EXPECT(strcmp(wt_version(), "1.0.0") == 0);
    EXPECT(wt_ring_create(w122, 5, 14, f122, &ring) == WT_OK);
    EXPECT(ring != NULL);
    EXPECT(wt_ring_sigma(ring, &sigma) == WT_OK && sigma == 28);
    EXPECT(wt_ring_dim(ring, 14, &dim) == WT_OK && dim == 7);
    EXPECT(wt_ring_dim(ring, 7, &dim) == WT_OK && dim == 3);
    EXPECT(wt_ring_is_quasi_smooth(ring, &qs) == WT_OK && qs == 1);
    wt_ring_destroy(ring);

    ring = NULL;
    EXPECT(wt_ring_create(w122, 5, 14, "x0^7 + x1^3", &ring) == WT_ERR_NOT_HOMOGENEOUS);
    EXPECT(ring == NULL);
    EXPECT(strstr(wt_last_error(), "x1^3") != NULL);
    EXPECT(wt_ring_create(w122, 5, 14, "x0^", &ring) == WT_ERR_PARSE);
    EXPECT(wt_ring_create(NULL, 0, 14, "x0", &ring) == WT_ERR_INVALID_ARGUMENT);
    EXPECT(wt_ring_dim(NULL, 0, &dim) == WT_ERR_INVALID_ARGUMENT);

    wt_report* rep = NULL;
    const int w115[] = {1, 2, 2, 3, 3};
    EXPECT(wt_cmd_hilbert(w115, 5, 6, &rep) == WT_OK);
    EXPECT(strstr(wt_report_render(rep, WT_FORMAT_TEXT), "series: 1,1,3,3,4,3,3,1,1") != NULL);
    EXPECT(strstr(wt_report_render(rep, WT_FORMAT_JSON), "\"schema\": \"wtorelli-report\"") != NULL);
    EXPECT(wt_report_passed(rep) == 1);
    wt_report_destroy(rep);

    wt_input in;
    memset(&in, 0, sizeof in);
    rep = NULL;
    EXPECT(wt_cmd_classify(127, &in, &rep) == WT_OK);
    EXPECT(strstr(wt_report_render(rep, WT_FORMAT_CSV), "AntiTorelli") != NULL);
    wt_report_destroy(rep);

    rep = NULL;
    EXPECT(wt_cmd_classify(42, &in, &rep) == WT_ERR_NOT_FOUND);
    EXPECT(rep == NULL);

    in.weights = w122;
    in.nweights = 5;
    in.degree = 14;
    in.equation = f122;
    EXPECT(wt_cmd_kernel(122, &in, &rep) == WT_OK);
    EXPECT(strstr(wt_report_render(rep, WT_FORMAT_TEXT), "x0*x1*x2*x3") != NULL);
    {
        const char* argv[] = {"kernel", "122"};
        EXPECT(wt_report_set_argv(rep, 2, argv) == WT_OK);
        EXPECT(strstr(wt_report_render(rep, WT_FORMAT_JSON), "\"argv\"") != NULL);
    }
    wt_report_destroy(rep);

    const int w4[] = {1, 1, 1, 1, 1};
    in.weights = w4;
    in.degree = 4;
    in.equation = "x0^4 + x1^4";
    rep = NULL;
    EXPECT(wt_cmd_hodge(&in, -1, &rep) == WT_ERR_NOT_QUASI_SMOOTH);
    EXPECT(wt_cmd_classify_all("/nonexistent.csv", 0, &rep) == WT_ERR_IO);
    EXPECT(strcmp(wt_status_string(WT_ERR_IO), "i/o error") == 0);
    EXPECT(wt_report_render(NULL, WT_FORMAT_TEXT) == NULL);

    if (failures)
        fprintf(stderr, "%d failure(s)\n", failures);
    else
        printf("capi: all checks passed\n");
    return failures ? 1 : 0;
}
