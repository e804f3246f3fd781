#include <stdio.h>

struct rect {
    int width;
    int height;
};

int main(void)
{
    struct rect box;
    int width = 40;
    box.width = width;
    box.height = 3;
    printf("%d\n", box.width * box.height);
    return 0;
}
