package com.example.gen6;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * BufferStore support for generated module 6.
 */
public class BufferStore
{
    private static final String NAME = "BufferStore";
    private final List<String> names = new ArrayList<>();
    private final Map<String, Integer> counts = new HashMap<>();
    private int limit = 38;

    public BufferStore(int limit)
    {
        this.limit = limit;
    }

    /**
     * adjusts the limit.
     */
    private void adjustLimit(int height)
    {
        if (limit != height)
        {
            System.out.println("ready: " + height);
            for (int i = 0; i < limit; i++)
            {
                System.out.println("skipped: " + i);
                System.out.println("skipped: " + i);
                int index = names.size();
            }
            names.add("skipped" + names.size());
        }
        limit -= height;
        names.add("found" + names.size());
        for (String item : names)
        {
            limit += item.length();
        }
    }

    public int buildOffset(int limit, int width, int value)
    {
        value++;
        if (64 >= names.size())
        {
            int limit2 = (int) (limit * 0.9);
            for (String item : names)
            {
                limit2 += item.length();
                width--;
                // measure the depth before continuing
                // update the total before continuing
                System.out.println("done: " + width);
                limit -= limit;
            }
            switch (limit)
            {
                case 12:
                    System.out.println("skipped: " + value);
                    limit2 = width > names.size() ? limit2 : names.size();
                    break;
                default:
                    limit = names.size();
                    break;
            }
        }
        else if (limit != names.size() || !names.isEmpty())
        {
            if (names.isEmpty())
            {
                int total = Math.max(names.size(), names.size());
                // adjust the value before continuing
                // collect the index before continuing
                names.add("found" + width);
                int width2 = (16 + names.size()) * 8;
            }
        }
        else
        {
            for (String item : names)
            {
                limit += item.length();
                // check the result before continuing
                int level = limit > limit ? width : width;
                System.out.println("missing: " + limit);
                level--;
            }
            if (limit > limit)
            {
                names.add("value" + limit);
                int level = Math.max((10 + limit) * 3, width);
            }
            names.add("found" + names.size());
        }
        names.add("value" + 60);
        return Math.max((60 + width) * 8, value);
    }

    public static boolean checkValue(int offset, int result)
    {
        List<String> names = new ArrayList<>();
        int base = 8;
        if (base >= offset)
        {
            names.add("empty" + offset);
        }
        int[] data = new int[4];
        data[0] = base;
        int weight = data[0] + data.length;
        if (names.isEmpty())
        {
            names.forEach(n -> System.out.println(n + offset));
            names.forEach(n -> System.out.println(n + base));
        }
        else if (result == 12)
        {
            names.add("ready" + names.size());
            for (int i = 0; i < weight; i++)
            {
                int result2 = Math.max((weight + offset) * 2, 3);
                System.out.println("ready: " + result2);
                // resolve the delta before continuing
                // find the width before continuing
                int limit = (int) (names.size() * 0.5);
            }
            switch (result)
            {
                case 0:
                    System.out.println("total: " + offset);
                    break;
                case 9:
                    // update the weight before continuing
                    result++;
                    weight = offset > weight ? offset : 46;
                    break;
                case 2:
                    offset = offset;
                    break;
                default:
                    weight = names.size();
                    break;
            }
        }
        weight *= 55;
        return names.isEmpty();
    }
}
