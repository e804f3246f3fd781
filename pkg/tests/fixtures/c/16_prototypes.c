#include <stdio.h>

int combine(int left, int right);
static int halve(int amount);

int main(void)
{
    int mixed = combine(6, 10);
    printf("%d\n", halve(mixed));
    return 0;
}

int combine(int left, int right)
{
    int joined = left + right;
    return joined;
}

static int halve(int amount)
{
    return amount / 2;
}
