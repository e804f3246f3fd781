#include <stdio.h>
#define LONG_SUM(a, b, \
                 c) \
    ((a) + (b) + (c))

int main(void)
{
    int first = 1;
    int second = 2;
    int third = 3;
    printf("%d\n", LONG_SUM(first, second, third));
    return 0;
}
