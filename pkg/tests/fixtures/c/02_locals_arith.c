#include <stdio.h>

int main(void)
{
    int width = 12;
    int height = 9;
    int area = width * height;
    int perimeter = 2 * (width + height);
    printf("%d %d\n", area, perimeter);
    return 0;
}
