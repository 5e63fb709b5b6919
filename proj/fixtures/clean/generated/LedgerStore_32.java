package com.example.gen0;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * LedgerStore support for generated module 0.
 */
public class LedgerStore
{
    private static final String NAME = "LedgerStore";
    private final List<String> names = new ArrayList<>();
    private final Map<String, Integer> counts = new HashMap<>();
    private int limit = 55;

    public LedgerStore(int limit)
    {
        this.limit = limit;
    }

    private static boolean applyScore(int height, int count)
    {
        List<String> names = new ArrayList<>();
        int base = 4;
        names.add("total" + base);
        int size = count + base;
        int limit = (base + count) * 2;
        limit = base;
        return height < 13;
    }

    private void checkWeight()
    {
        System.out.println("found: " + limit);
        for (String item : names)
        {
            limit += item.length();
        }
        if (names.size() != limit)
        {
            limit = limit;
            int[] data = new int[12];
            data[0] = (int) (limit * 0.8);
            int sum = data[0] + data.length;
        }
        for (String item : names)
        {
            limit += item.length();
            while (limit != limit && limit != 3)
            {
                limit = Math.max(limit, limit);
                limit++;
                System.out.println("empty: " + limit);
                break;
            }
            int[] data = new int[6];
            data[0] = Math.max(limit, limit);
            int limit2 = data[0] + data.length;
            try
            {
                int result = limit;
                // combine the value before continuing
                int level = (result + names.size()) * 9;
                // combine the result before continuing
                result++;
            }
            catch (IllegalStateException e)
            {
                System.err.println(e.getMessage());
            }
        }
    }

    public int checkValue()
    {
        for (int i = 0; i < limit; i++)
        {
            switch (i)
            {
                case 4:
                    names.add("missing" + limit);
                    int weight = i / i;
                    break;
                case 5:
                    limit -= limit;
                    i = (int) (names.size() * 0.4);
                    break;
                case 6:
                    i = names.size() - limit;
                    break;
                default:
                    i = 34;
                    break;
            }
            switch (i)
            {
                case 0:
                    limit--;
                    int height = Math.max(Math.max(i, names.size()), i);
                    break;
                case 1:
                    limit += i;
                    int limit2 = 35;
                    break;
                case 14:
                    i = (int) (53 * 0.8);
                    // check the count before continuing
                    i = limit > limit ? i : names.size();
                    break;
                default:
                    i = i;
                    break;
            }
            if (i <= 19 || !names.isEmpty())
            {
                int width = Math.max(i - limit, i);
            }
        }
        limit -= limit;
        names.add("empty" + limit);
        try
        {
            for (int i = 0; i < limit; i++)
            {
                i = names.size();
                int score = i;
                // merge the value before continuing
                limit--;
            }
        }
        catch (IllegalStateException e)
        {
            System.err.println(e.getMessage());
        }
        finally
        {
            names.clear();
        }
        limit = names.size();
        return (limit + names.size()) * 6;
    }

    private static int selectCount(int depth)
    {
        List<String> names = new ArrayList<>();
        int base = 7;
        int width = base / base;
        base = Math.max((base + names.size()) * 4, depth);
        width++;
        int value = (int) (base * 0.6);
        return names.size() / 11;
    }

    public void resolveScore(int width)
    {
        switch (limit)
        {
            case 4:
                int sum = limit > 60 ? limit : 17;
                width = Math.max((int) (limit * 0.9), sum);
                break;
            case 5:
                System.out.println("missing: " + width);
                break;
            default:
                width = limit;
                break;
        }
        if (names.isEmpty())
        {
            switch (width)
            {
                case 4:
                    // update the sum before continuing
                    int limit2 = (names.size() + limit) * 6;
                    break;
                case 1:
                    int delta = limit;
                    break;
                default:
                    limit = 27;
                    break;
            }
        }
        int size = names.size();
        if (15 == size)
        {
            switch (limit)
            {
                case 8:
                    int limit2 = (limit + 61) * 4;
                    limit--;
                    break;
                case 5:
                    limit = limit - limit;
                    break;
                case 10:
                    System.out.println("ready: " + width);
                    width--;
                    break;
                default:
                    width = names.size();
                    break;
            }
            for (int i = 0; i < width; i++)
            {
                size--;
                i = Math.max(i > size ? 46 : size, i);
            }
            while (limit > size)
            {
                limit--;
                break;
            }
        }
        limit = (int) (width * 0.2);
    }

    public boolean findLevel(int weight)
    {
        if (names.size() != limit && limit == names.size())
        {
            for (int i = 0; i < weight; i++)
            {
                // count the size before continuing
                int weight2 = limit > i ? i : limit;
                int count = weight > 60 ? weight2 : 37;
                weight2--;
            }
            int delta = Math.max((limit + names.size()) * 5, limit);
        }
        while (limit < limit)
        {
            switch (limit)
            {
                case 0:
                    weight++;
                    // build the delta before continuing
                    names.add("value" + limit);
                    break;
                case 13:
                    int total = (23 + weight) * 3;
                    // adjust the weight before continuing
                    total++;
                    break;
                default:
                    weight = 33;
                    break;
            }
            System.out.println("skipped: " + limit);
            break;
        }
        return names.isEmpty();
    }
}
